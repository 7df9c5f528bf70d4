#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvsum/coloring.hpp"
#include "tvsum/spine.hpp"
#include "tvsum/tet_labels.hpp"

namespace tvsum {

/// Circles in a colored tetrahedral net: gcd(C1-C2, C1-C3)/2 + C2 + C3 - C1,
/// with gcd(0,0) = 0.
long circle_count(const TetLabels& labels);

struct CurveType {
  long a = 0, b = 0;   // coprime, a <= b; (0,1) is a quad, (1,1) the octagon
  long multiplicity = 0;
};
/// The non-triangle curve class of the net; nullopt for all-triangle nets.
std::optional<CurveType> curve_type(const TetLabels& labels);

/// Euler characteristic of the spinal surface (closed case). Rejects
/// augmented spines.
long surface_euler_char(const AbstractSpine& spine, const Coloring& coloring);

/// Q(F) = sum_f -2 chi(f) u_f + sum_v [(C1-C2)(C1-C3)/2 + C1].
long q_value(const AbstractSpine& spine, const Coloring& coloring);

/// Super-additivity cross term sum_v (delta gamma' + delta' gamma)/2 for two
/// colorings sharing a sector; Q(F+F') = Q(F) + Q(F') + cross exactly.
long q_cross_term(const AbstractSpine& spine, const Coloring& x, const Coloring& y);

/// Per-vertex sector data: the canonical descending ordering of the three
/// column functionals (ties broken lexicographically) plus the bitmask of all
/// compatible orderings (bit i = i-th permutation of {0,1,2} in lex order).
struct VertexSector {
  std::array<int, 3> canonical;
  std::uint8_t compatible_mask;
};
std::vector<VertexSector> sector_of(const AbstractSpine& spine, const Coloring& coloring);
std::string sector_label(const std::vector<VertexSector>& sectors);
/// True if some ordering is compatible with both colorings at every vertex.
bool common_sector_exists(const AbstractSpine& spine, const Coloring& x, const Coloring& y);

/// Largest k with coloring - k * (boundary shift) admissible; equals the
/// minimum strand number over all edges on unaugmented spines.
long peel_index(const AbstractSpine& spine, const Coloring& coloring);

/// Normal surface: C1 = C2 at every vertex.
bool is_normal(const AbstractSpine& spine, const Coloring& coloring);

struct VertexReport {
  std::array<long, 3> column_sums;  // sorted descending
  long circles = 0;
  std::optional<CurveType> curve;
  VertexSector sector{};
};

struct SurfaceInvariants {
  std::optional<long> euler_char;   // absent on augmented spines
  long q = 0;
  long peel = 0;
  bool normal = false;
  long max_color = 0;
  long m_even = 0;
  std::vector<VertexReport> vertices;
};

SurfaceInvariants analyze(const AbstractSpine& spine, const Coloring& coloring);

}  // namespace tvsum
