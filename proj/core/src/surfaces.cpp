#include "tvsum/surfaces.hpp"

#include <algorithm>
#include <numeric>

#include "tvsum/errors.hpp"

namespace tvsum {

long circle_count(const TetLabels& labels) {
  const auto C = labels.column_sums_sorted();
  const long g = std::gcd(C[0] - C[1], C[0] - C[2]);
  return g / 2 + C[1] + C[2] - C[0];
}

std::optional<CurveType> curve_type(const TetLabels& labels) {
  const auto C = labels.column_sums_sorted();
  const long d1 = (C[0] - C[1]) / 2, d2 = (C[0] - C[2]) / 2;
  if (d1 == 0 && d2 == 0) return std::nullopt;
  const long g = std::gcd(d1, d2);
  return CurveType{d1 / g, d2 / g, g};  // d1 <= d2 since C2 >= C3
}

long surface_euler_char(const AbstractSpine& spine, const Coloring& coloring) {
  if (spine.is_augmented()) {
    throw InvalidInput("Euler characteristic is computed for the closed (unaugmented) case only");
  }
  if (!is_admissible_coloring(spine, coloring)) throw InvalidInput("coloring not admissible");
  long twice = 0;
  for (long u : coloring.colors) twice += 2 * u;
  for (int v = 0; v < spine.vertex_count(); ++v) {
    const auto C = vertex_labeling(spine, coloring, v).column_sums_sorted();
    twice += std::gcd(C[0] - C[1], C[0] - C[2]) + C[1] + C[2] - 3 * C[0];
  }
  if (twice % 2 != 0) {
    throw InvalidInput("spine incidence does not support the closed-case Euler formula");
  }
  return twice / 2;
}

long q_value(const AbstractSpine& spine, const Coloring& coloring) {
  if (!is_admissible_coloring(spine, coloring)) throw InvalidInput("coloring not admissible");
  long q = 0;
  for (size_t i = 0; i < coloring.colors.size(); ++i) {
    q -= 2 * spine.faces[i].chi * coloring.colors[i];
  }
  for (int v = 0; v < spine.vertex_count(); ++v) {
    const auto C = vertex_labeling(spine, coloring, v).column_sums_sorted();
    q += (C[0] - C[1]) * (C[0] - C[2]) / 2 + C[0];
  }
  return q;
}

namespace {

// All 6 permutations of {0,1,2} in lexicographic order.
constexpr std::array<std::array<int, 3>, 6> kPerms = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

std::uint8_t compatible_mask(const std::array<long, 3>& sums) {
  std::uint8_t mask = 0;
  for (size_t p = 0; p < kPerms.size(); ++p) {
    const auto& pi = kPerms[p];
    if (sums[static_cast<size_t>(pi[0])] >= sums[static_cast<size_t>(pi[1])] &&
        sums[static_cast<size_t>(pi[1])] >= sums[static_cast<size_t>(pi[2])]) {
      mask |= static_cast<std::uint8_t>(1u << p);
    }
  }
  return mask;
}

std::array<int, 3> canonical_order(std::uint8_t mask) {
  for (size_t p = 0; p < kPerms.size(); ++p) {
    if (mask & (1u << p)) return kPerms[p];
  }
  throw InternalFault("no compatible sector ordering");
}

}  // namespace

std::vector<VertexSector> sector_of(const AbstractSpine& spine, const Coloring& coloring) {
  if (!is_admissible_coloring(spine, coloring)) throw InvalidInput("coloring not admissible");
  std::vector<VertexSector> out;
  out.reserve(spine.vertices.size());
  for (int v = 0; v < spine.vertex_count(); ++v) {
    const auto sums = vertex_labeling(spine, coloring, v).column_sums();
    const auto mask = compatible_mask(sums);
    out.push_back(VertexSector{canonical_order(mask), mask});
  }
  return out;
}

std::string sector_label(const std::vector<VertexSector>& sectors) {
  std::string s;
  for (size_t v = 0; v < sectors.size(); ++v) {
    if (v > 0) s += '|';
    for (int i : sectors[v].canonical) s += static_cast<char>('0' + i);
  }
  return s;
}

bool common_sector_exists(const AbstractSpine& spine, const Coloring& x, const Coloring& y) {
  const auto sx = sector_of(spine, x), sy = sector_of(spine, y);
  for (size_t v = 0; v < sx.size(); ++v) {
    if ((sx[v].compatible_mask & sy[v].compatible_mask) == 0) return false;
  }
  return true;
}

long q_cross_term(const AbstractSpine& spine, const Coloring& x, const Coloring& y) {
  if (!common_sector_exists(spine, x, y)) {
    throw InvalidInput("colorings share no sector; the super-additivity identity does not apply");
  }
  long cross = 0;
  for (int v = 0; v < spine.vertex_count(); ++v) {
    const auto cx = vertex_labeling(spine, x, v).column_sums_sorted();
    const auto cy = vertex_labeling(spine, y, v).column_sums_sorted();
    const long dx = cx[0] - cx[1], gx = cx[0] - cx[2];
    const long dy = cy[0] - cy[1], gy = cy[0] - cy[2];
    cross += (dx * gy + dy * gx) / 2;
  }
  return cross;
}

long peel_index(const AbstractSpine& spine, const Coloring& coloring) {
  if (!is_admissible_coloring(spine, coloring)) throw InvalidInput("coloring not admissible");
  if (!spine.is_augmented()) {
    // minimum strand number over all edges
    long k = -1;
    for (const auto& e : spine.edges) {
      const auto x = strand_numbers(coloring.colors[static_cast<size_t>(e.faces[0])],
                                    coloring.colors[static_cast<size_t>(e.faces[1])],
                                    coloring.colors[static_cast<size_t>(e.faces[2])]);
      const long mn = std::min({x[0], x[1], x[2]});
      k = (k < 0) ? mn : std::min(k, mn);
    }
    return std::max(k, 0L);
  }
  // Augmented case: largest k with (coloring - k * boundary shift) admissible.
  long k = 0;
  Coloring probe = coloring;
  for (;;) {
    bool ok = true;
    for (size_t i = 0; i < probe.colors.size() && ok; ++i) {
      if (!spine.faces[i].forced.has_value() && probe.colors[i] < 2) ok = false;
    }
    if (ok) {
      Coloring next = probe;
      for (size_t i = 0; i < next.colors.size(); ++i) {
        if (!spine.faces[i].forced.has_value()) next.colors[i] -= 2;
      }
      if (is_admissible_coloring(spine, next)) {
        probe = std::move(next);
        ++k;
        continue;
      }
    }
    return k;
  }
}

bool is_normal(const AbstractSpine& spine, const Coloring& coloring) {
  if (!is_admissible_coloring(spine, coloring)) throw InvalidInput("coloring not admissible");
  for (int v = 0; v < spine.vertex_count(); ++v) {
    const auto C = vertex_labeling(spine, coloring, v).column_sums_sorted();
    if (C[0] != C[1]) return false;
  }
  return true;
}

SurfaceInvariants analyze(const AbstractSpine& spine, const Coloring& coloring) {
  if (!is_admissible_coloring(spine, coloring)) throw InvalidInput("coloring not admissible");
  SurfaceInvariants out;
  if (!spine.is_augmented()) out.euler_char = surface_euler_char(spine, coloring);
  out.q = q_value(spine, coloring);
  out.peel = peel_index(spine, coloring);
  out.normal = is_normal(spine, coloring);
  out.max_color = coloring.max_color();
  out.m_even = coloring.m_even();
  const auto sectors = sector_of(spine, coloring);
  for (int v = 0; v < spine.vertex_count(); ++v) {
    const auto labels = vertex_labeling(spine, coloring, v);
    VertexReport r;
    r.column_sums = labels.column_sums_sorted();
    r.circles = circle_count(labels);
    r.curve = curve_type(labels);
    r.sector = sectors[static_cast<size_t>(v)];
    out.vertices.push_back(r);
  }
  return out;
}

}  // namespace tvsum
