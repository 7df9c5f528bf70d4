#pragma once

#include <array>
#include <string>

namespace tvsum {

/// Even sum and all three triangle inequalities.
bool is_admissible(long a, long b, long c);

/// Strand numbers x1 = (a+b-c)/2, x2 = (c+b-a)/2, x3 = (a+c-b)/2 of an
/// admissible triple. Throws InvalidInput on inadmissible input.
std::array<long, 3> strand_numbers(long a, long b, long c);

enum class ShiftPattern {
  kAllGrow,      // every label + 2k
  kEFixed,       // e stays, the other five grow
  kEAndFFixed,   // e and f stay, the four column-1/2 labels grow
};

/// Labels of a tetrahedral net in the positional layout
///
///     ( a  b  e )
///     ( c  d  f )
///
/// with opposite-edge columns (a,c), (b,d), (e,f) and vertex triples
/// (a,d,e), (b,c,e), (a,b,f), (c,d,f). Construction validates that all four
/// vertex triples are admissible.
class TetLabels {
 public:
  TetLabels(long a, long b, long e, long c, long d, long f);

  /// Skips admissibility validation. Column sums and other purely positional
  /// derived data are meaningful for any nonnegative entries; the quantum
  /// functions are not.
  static TetLabels unchecked(long a, long b, long e, long c, long d, long f);

  long a() const { return L_[0]; }
  long b() const { return L_[1]; }
  long e() const { return L_[2]; }
  long c() const { return L_[3]; }
  long d() const { return L_[4]; }
  long f() const { return L_[5]; }

  /// In (a, b, e, c, d, f) order.
  const std::array<long, 6>& as_array() const { return L_; }

  std::array<std::array<long, 3>, 4> vertex_triples() const;
  /// Unsorted column sums (a+c, b+d, e+f).
  std::array<long, 3> column_sums() const;
  /// Sorted descending: C1 >= C2 >= C3.
  std::array<long, 3> column_sums_sorted() const;
  /// Half vertex sums A_j, j = 1..4.
  std::array<long, 4> half_vertex_sums() const;
  /// Half cycle sums B_i = (sum of the four labels not in column i)/2.
  std::array<long, 3> half_cycle_sums() const;
  long label_sum() const;
  /// Summation range of the tetrahedral coefficient: s runs m..M.
  long s_lo() const;  // m = max A_j
  long s_hi() const;  // M = min B_i

  TetLabels shifted(long k, ShiftPattern pattern = ShiftPattern::kAllGrow) const;

  /// Symmetries of the tetrahedral coefficient (used by tests and by the
  /// augmented-limit dispatch): permute columns, or swap top/bottom of two
  /// columns simultaneously.
  TetLabels with_column_order(int c0, int c1, int c2) const;
  TetLabels with_pair_flip(int i, int j) const;

  std::string str() const;

  friend bool operator==(const TetLabels& x, const TetLabels& y) { return x.L_ == y.L_; }

 private:
  struct Unchecked {};
  TetLabels(Unchecked, long a, long b, long e, long c, long d, long f)
      : L_{a, b, e, c, d, f} {}

  std::array<long, 6> L_;  // a, b, e, c, d, f
};

}  // namespace tvsum
