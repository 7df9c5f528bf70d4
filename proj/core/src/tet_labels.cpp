#include "tvsum/tet_labels.hpp"

#include <algorithm>

#include "tvsum/errors.hpp"

namespace tvsum {

bool is_admissible(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return a <= b + c && b <= a + c && c <= a + b;
}

std::array<long, 3> strand_numbers(long a, long b, long c) {
  if (!is_admissible(a, b, c)) {
    throw InvalidInput("inadmissible triple (" + std::to_string(a) + "," + std::to_string(b) +
                       "," + std::to_string(c) + ")");
  }
  return {(a + b - c) / 2, (c + b - a) / 2, (a + c - b) / 2};
}

TetLabels::TetLabels(long a, long b, long e, long c, long d, long f) : L_{a, b, e, c, d, f} {
  for (const auto& t : vertex_triples()) {
    if (!is_admissible(t[0], t[1], t[2])) {
      throw InvalidInput("inadmissible vertex triple in labeling " + str());
    }
  }
}

TetLabels TetLabels::unchecked(long a, long b, long e, long c, long d, long f) {
  return TetLabels(Unchecked{}, a, b, e, c, d, f);
}

std::array<std::array<long, 3>, 4> TetLabels::vertex_triples() const {
  return {{{a(), d(), e()}, {b(), c(), e()}, {a(), b(), f()}, {c(), d(), f()}}};
}

std::array<long, 3> TetLabels::column_sums() const {
  return {a() + c(), b() + d(), e() + f()};
}

std::array<long, 3> TetLabels::column_sums_sorted() const {
  auto s = column_sums();
  std::sort(s.begin(), s.end(), std::greater<long>());
  return s;
}

std::array<long, 4> TetLabels::half_vertex_sums() const {
  return {(a() + d() + e()) / 2, (b() + c() + e()) / 2, (a() + b() + f()) / 2,
          (c() + d() + f()) / 2};
}

std::array<long, 3> TetLabels::half_cycle_sums() const {
  const long s = label_sum();
  const auto c = column_sums();
  return {(s - c[0]) / 2, (s - c[1]) / 2, (s - c[2]) / 2};
}

long TetLabels::label_sum() const { return a() + b() + c() + d() + e() + f(); }

long TetLabels::s_lo() const {
  const auto A = half_vertex_sums();
  return *std::max_element(A.begin(), A.end());
}

long TetLabels::s_hi() const {
  const auto B = half_cycle_sums();
  return *std::min_element(B.begin(), B.end());
}

TetLabels TetLabels::shifted(long k, ShiftPattern pattern) const {
  if (k < 0) throw InvalidInput("shift k must be nonnegative");
  const long s = 2 * k;
  switch (pattern) {
    case ShiftPattern::kAllGrow:
      return {a() + s, b() + s, e() + s, c() + s, d() + s, f() + s};
    case ShiftPattern::kEFixed:
      return {a() + s, b() + s, e(), c() + s, d() + s, f() + s};
    case ShiftPattern::kEAndFFixed:
      return {a() + s, b() + s, e(), c() + s, d() + s, f()};
  }
  throw InvalidInput("bad shift pattern");
}

TetLabels TetLabels::with_column_order(int c0, int c1, int c2) const {
  const std::array<std::array<long, 2>, 3> cols = {{{a(), c()}, {b(), d()}, {e(), f()}}};
  if (c0 + c1 + c2 != 3 || c0 == c1 || c1 == c2 || c0 == c2) {
    throw InvalidInput("column order must be a permutation of 0,1,2");
  }
  return {cols[c0][0], cols[c1][0], cols[c2][0], cols[c0][1], cols[c1][1], cols[c2][1]};
}

TetLabels TetLabels::with_pair_flip(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) throw InvalidInput("flip needs two distinct columns");
  std::array<std::array<long, 2>, 3> cols = {{{a(), c()}, {b(), d()}, {e(), f()}}};
  std::swap(cols[i][0], cols[i][1]);
  std::swap(cols[j][0], cols[j][1]);
  return {cols[0][0], cols[1][0], cols[2][0], cols[0][1], cols[1][1], cols[2][1]};
}

std::string TetLabels::str() const {
  return "(" + std::to_string(a()) + "," + std::to_string(b()) + "," + std::to_string(e()) +
         ";" + std::to_string(c()) + "," + std::to_string(d()) + "," + std::to_string(f()) + ")";
}

}  // namespace tvsum
