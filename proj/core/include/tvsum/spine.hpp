#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tvsum/triangulation.hpp"

namespace tvsum {

/// Face slots in 6j positions (a, b, e, c, d, f): columns (a,c), (b,d), (e,f)
/// are the opposite-edge pairs of the dual tetrahedron.
struct SpineVertex {
  std::array<int, 6> faces;
  /// Corner triples (a,d,e), (b,c,e), (a,b,f), (c,d,f) as face ids.
  std::array<std::array<int, 3>, 4> corner_triples() const {
    const auto& s = faces;
    return {{{s[0], s[4], s[2]}, {s[1], s[3], s[2]}, {s[0], s[1], s[5]}, {s[3], s[4], s[5]}}};
  }
};

struct SpineEdge {
  std::array<int, 3> faces;  // the theta triple, in stored functional order
  int chi = 1;               // 1: has a vertex in its closure, 0: closed curve edge
};

struct SpineFace {
  int chi = 1;                      // 1: disk, 0: annulus
  std::optional<int> forced;        // annular faces are forced to color 1
};

struct AbstractSpine {
  std::vector<SpineVertex> vertices;
  std::vector<SpineEdge> edges;
  std::vector<SpineFace> faces;

  bool is_augmented() const;
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
};

/// Dual spine of an ideal triangulation: one vertex per tetrahedron, one face
/// per edge class, one edge per glued face pair. 6j positions follow the
/// fixed convention a = E(01), b = E(02), c = E(23), d = E(13), e = E(03),
/// f = E(12); all chi weights are 1.
AbstractSpine dual_spine(const Triangulation& tri);

/// #{f : chi(f) = 1} - #vertices.
long euler_characteristic(const AbstractSpine& spine);

/// Reads the spine JSON format; validates ids, chi ranges, forced colors and
/// corner/edge incidence.
AbstractSpine load_spine(const std::string& json_text);
std::string serialize_spine(const AbstractSpine& spine);

}  // namespace tvsum
