#pragma once

#include <array>

#include "tvsum/qcontext.hpp"
#include "tvsum/signed_magnitude.hpp"
#include "tvsum/tet_labels.hpp"

namespace tvsum {

/// Quantized integer [n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2}).
Real quantum_int(const QContext& ctx, long n);

/// Delta_n = (-1)^n [n+1].
Real quantum_delta(const QContext& ctx, long n);

/// [n]! = [n][n-1]!, [0]! = 1. Positive; returned in log space since the
/// magnitude is t^{-n(n-1)} (q;q)_n / (1-q)^n.
SignedMagnitude quantum_factorial(const QContext& ctx, long n);

/// Finite q-Pochhammer (x;q)_n = prod_{i=1..n} (1 - x q^{i-1}).
Real qpochhammer(const QContext& ctx, const Real& x, long n);

struct PochhammerValue {
  Real value;           // truncated product; truth lies in [value*e^{-bound}, value]
  Real log_tail_bound;
  Real eps;             // value - value*e^{-bound}
};
/// (x;q)_inf for 0 <= x <= 1, truncated with a recorded analytic tail bound.
PochhammerValue qpochhammer_infinite(const QContext& ctx, const Real& x);

/// theta(a,b,c) for an admissible triple.
SignedMagnitude theta(const QContext& ctx, long a, long b, long c);

/// Tetrahedral coefficient, evaluated through the rescaled alternating sum
/// (largest term first, compensated) times the exact positive square-root
/// prefactors; agrees with the exact-rational oracle at rational t.
SignedMagnitude tet(const QContext& ctx, const TetLabels& labels);

/// Unitary 6j symbol Tet / sqrt(prod |theta|) — equal to Tet/sqrt(prod theta)
/// whenever that radicand is positive (the product of the four theta signs is
/// (-1)^{label sum}, so it can be negative for odd label sums; the magnitude
/// bound below holds either way).
Real sixj_unitary(const QContext& ctx, const TetLabels& labels);

struct SixjBound {
  Real k_constant;  // K(t) = (1-q)/((q;q)_inf)^9, conservative end
  long exponent;    // (C1-C2)(C1-C3)/2 + C1
  Real bound;       // K * t^exponent; always >= |sixj_unitary|
};
SixjBound sixj_bound(const QContext& ctx, const TetLabels& labels);

/// Sorted column sums C1 >= C2 >= C3.
std::array<long, 3> column_sums(const TetLabels& labels);

enum class LimitVariant {
  kAllGrow,     // lim t^{-4k} 6j(all labels + 2k): explicit series
  kEFixed,      // lim t^{-4k} 6j(e fixed, rest + 2k): Cauchy sequence
  kEAndFFixed,  // lim t^{-4k} 6j(e, f fixed, rest + 2k): Cauchy sequence
};

struct LimitOptions {
  long k_ceiling = 512;  // sequence evaluations before reporting non-convergence
};

/// Limits of renormalized 6j symbols under color shifts. The kEFixed and
/// kEAndFFixed limits are exactly zero unless a + c == b + d.
Real sixj_infinity(const QContext& ctx, const TetLabels& labels, LimitVariant variant,
                   const Real& tol, const LimitOptions& options = {});

namespace detail {
/// The alternating core sum of the tetrahedral coefficient in its rescaled
/// form: sum_{s=m..M} (-1)^s t^{p'_s} (q;q)_{s+1} /
/// (prod_i (q;q)_{B_i - s} prod_j (q;q)_{s - A_j}), summed from s = M down.
/// All terms are O(t^{p'_M}); |6j| = (1-q) sqrt(P) |core|.
Real sixj_sum_core(const QContext& ctx, const TetLabels& labels);

/// sqrt(prod_{v,i} (q;q)_{x_{v,i}} / prod_j (q;q)_{A_j + 1}); strictly positive.
Real sixj_sqrt_prefactor(const QContext& ctx, const TetLabels& labels);
}  // namespace detail

}  // namespace tvsum
