#pragma once

#include <array>
#include <string>
#include <vector>

namespace tvsum {

/// One ideal tetrahedron: face k (opposite vertex k) is glued to
/// neighbors[k] by the vertex permutation gluings[k] (images of 0..3).
struct Tetrahedron {
  std::array<int, 4> neighbors;
  std::array<std::array<int, 4>, 4> gluings;
};

/// Ideal triangulation given by face gluing data. Every face is glued;
/// gluings are involutive in pairs (validated on construction).
class Triangulation {
 public:
  explicit Triangulation(std::vector<Tetrahedron> tets);

  static Triangulation parse(const std::string& json_text);

  int tet_count() const { return static_cast<int>(tets_.size()); }
  const std::vector<Tetrahedron>& tetrahedra() const { return tets_; }

 private:
  std::vector<Tetrahedron> tets_;
};

/// Tetrahedron-edge slots are indexed 6*tet + edge, with edges of one
/// tetrahedron ordered (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
int edge_index(int u, int v);
std::array<int, 2> edge_vertices(int index);

struct EdgeClasses {
  std::vector<int> class_of;                 // size 6 * tet_count
  std::vector<std::vector<int>> members;     // slots per class, ascending
  int count() const { return static_cast<int>(members.size()); }
};

/// Union-find partition of the 6*tet_count tetrahedron-edges under all face
/// gluings. Classes are numbered by first slot occurrence.
EdgeClasses edge_classes(const Triangulation& tri);

}  // namespace tvsum
