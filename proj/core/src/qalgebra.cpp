#include "tvsum/qalgebra.hpp"

#include "tvsum/errors.hpp"

namespace tvsum {

Real quantum_int(const QContext& ctx, long n) {
  if (n < 0) throw InvalidInput("[n] needs n >= 0");
  if (n == 0) return ctx.zero();
  // [n] = t^{-2n+2} (1 - q^n) / (1 - q)
  return ctx.t_pow(-2 * n + 2) * (ctx.one() - pow_si(ctx.q(), n)) / ctx.one_minus_q();
}

Real quantum_delta(const QContext& ctx, long n) {
  if (n < 0) throw InvalidInput("Delta_n needs n >= 0");
  Real v = ctx.t_pow(-2 * n) * (ctx.one() - pow_si(ctx.q(), n + 1)) / ctx.one_minus_q();
  if (n % 2 != 0) v.negate();
  return v;
}

SignedMagnitude quantum_factorial(const QContext& ctx, long n) {
  if (n < 0) throw InvalidInput("[n]! needs n >= 0");
  // log [n]! = -n(n-1) log t + log (q;q)_n - n log(1-q)
  Real lm = ctx.log_t() * (-n * (n - 1)) + ctx.log_qq(n) - ctx.log_one_minus_q() * n;
  return {1, std::move(lm)};
}

Real qpochhammer(const QContext& ctx, const Real& x, long n) {
  if (n < 0) throw InvalidInput("(x;q)_n needs n >= 0");
  Real prod = ctx.one();
  Real xq = x;  // x q^{i-1}
  for (long i = 1; i <= n; ++i) {
    prod *= ctx.one() - xq;
    xq *= ctx.q();
  }
  return prod;
}

PochhammerValue qpochhammer_infinite(const QContext& ctx, const Real& x) {
  if (x.sign() < 0 || x > 1L) throw InvalidInput("(x;q)_inf implemented for 0 <= x <= 1");
  Real ulp = ctx.one();
  for (mpfr_prec_t i = 0; i < ctx.work_prec(); ++i) ulp /= 2L;

  PochhammerValue out{ctx.one(), ctx.zero(), ctx.zero()};
  Real xq = x;
  const long hard_cap = 2'000'000;
  for (long i = 1; i <= hard_cap; ++i) {
    out.value *= ctx.one() - xq;
    xq *= ctx.q();
    // |log tail| <= sum_{j>i} x q^{j-1}/(1-x q^{j-1}) <= xq/((1-q)(1-xq))
    Real tail = xq / (ctx.one_minus_q() * (ctx.one() - xq));
    if (tail < ulp) {
      out.log_tail_bound = tail;
      out.eps = out.value * tail;
      return out;
    }
  }
  throw InvalidInput("(x;q)_inf did not truncate; t too close to 1");
}

SignedMagnitude theta(const QContext& ctx, long a, long b, long c) {
  const auto x = strand_numbers(a, b, c);
  const long T = (a + b + c) / 2;
  SignedMagnitude r = quantum_factorial(ctx, T + 1);
  r *= quantum_factorial(ctx, x[0]);
  r *= quantum_factorial(ctx, x[1]);
  r *= quantum_factorial(ctx, x[2]);
  r /= quantum_factorial(ctx, a);
  r /= quantum_factorial(ctx, b);
  r /= quantum_factorial(ctx, c);
  if (T % 2 != 0) r.sign = -r.sign;
  return r;
}

namespace detail {

Real sixj_sum_core(const QContext& ctx, const TetLabels& L) {
  const auto A = L.half_vertex_sums();
  const auto B = L.half_cycle_sums();
  const auto C = L.column_sums_sorted();
  const long m = L.s_lo(), M = L.s_hi();

  // p'_{M-u} = e0 + 6u^2 + 2(2C1 - C2 - C3 + 1)u with e0 = (C1-C2)(C1-C3)/2 + C1.
  const long e0 = (C[0] - C[1]) * (C[0] - C[2]) / 2 + C[0];
  const long lin = 2 * (2 * C[0] - C[1] - C[2] + 1);

  Real tpow = ctx.t_pow(e0);           // t^{e_u}
  Real tstep = ctx.t_pow(6 + lin);     // t^{e_{u+1} - e_u}
  const Real tstep2 = ctx.t_pow(12);

  Real sum = ctx.zero(), comp = ctx.zero();
  for (long u = 0; u <= M - m; ++u) {
    const long s = M - u;
    Real den = ctx.qq(B[0] - s);
    den *= ctx.qq(B[1] - s);
    den *= ctx.qq(B[2] - s);
    for (int j = 0; j < 4; ++j) den *= ctx.qq(s - A[j]);
    Real term = tpow * ctx.qq(s + 1) / den;
    if (s % 2 != 0) term.negate();
    compensated_add(sum, comp, term);
    if (u < M - m) {
      tpow *= tstep;
      tstep *= tstep2;
    }
  }
  return sum + comp;
}

Real sixj_sqrt_prefactor(const QContext& ctx, const TetLabels& L) {
  Real num = ctx.one();
  for (const auto& t : L.vertex_triples()) {
    const auto x = strand_numbers(t[0], t[1], t[2]);
    num *= ctx.qq(x[0]);
    num *= ctx.qq(x[1]);
    num *= ctx.qq(x[2]);
  }
  Real den = ctx.one();
  for (long Aj : L.half_vertex_sums()) den *= ctx.qq(Aj + 1);
  if (!(num > 0L) || !(den > 0L)) {
    throw InternalFault("nonpositive radicand in 6j prefactor");
  }
  return sqrt(num / den);
}

}  // namespace detail

Real sixj_unitary(const QContext& ctx, const TetLabels& labels) {
  return ctx.one_minus_q() * detail::sixj_sqrt_prefactor(ctx, labels) *
         detail::sixj_sum_core(ctx, labels);
}

SignedMagnitude tet(const QContext& ctx, const TetLabels& labels) {
  // Tet = 6j * sqrt(prod |theta|); the four theta magnitudes enter in log space.
  const Real sixj = sixj_unitary(ctx, labels);
  if (sixj.is_zero()) return SignedMagnitude::zero(ctx.work_prec());
  Real half_log_thetas = ctx.zero();
  for (const auto& t : labels.vertex_triples()) {
    half_log_thetas += theta(ctx, t[0], t[1], t[2]).log_magnitude;
  }
  half_log_thetas /= 2L;
  return {sixj.sign(), log(abs(sixj)) + half_log_thetas};
}

SixjBound sixj_bound(const QContext& ctx, const TetLabels& labels) {
  const auto C = labels.column_sums_sorted();
  SixjBound out{ctx.k_constant(), (C[0] - C[1]) * (C[0] - C[2]) / 2 + C[0], ctx.zero()};
  out.bound = out.k_constant * ctx.t_pow(out.exponent);
  return out;
}

std::array<long, 3> column_sums(const TetLabels& labels) { return labels.column_sums_sorted(); }

namespace {

Real sixj_infinity_series(const QContext& ctx, const TetLabels& L, const Real& tol) {
  const auto C = L.column_sums_sorted();
  const long e0 = (C[0] - C[1]) * (C[0] - C[2]) / 2 + C[0];
  const long lin = 2 * (2 * C[0] - C[1] - C[2] + 1);
  const long d1 = (C[0] - C[1]) / 2, d2 = (C[0] - C[2]) / 2;
  const long base_sign = (C[1] + C[2]) / 2;

  const Real prefac = ctx.one_minus_q() * ctx.qq_inf().value;
  const Real lower = ctx.qq_inf().value * exp(-ctx.qq_inf().log_tail_bound);
  const Real env = prefac / pow_si(lower, 3);  // term magnitude <= env * t^{e_u}

  Real tpow = ctx.t_pow(e0);
  Real tstep = ctx.t_pow(6 + lin);
  const Real tstep2 = ctx.t_pow(12);

  Real sum = ctx.zero(), comp = ctx.zero();
  const long hard_cap = 1'000'000;
  for (long u = 0;; ++u) {
    Real term = prefac * tpow / (ctx.qq(u) * ctx.qq(u + d1) * ctx.qq(u + d2));
    if ((base_sign + u) % 2 != 0) term.negate();
    compensated_add(sum, comp, term);
    tpow *= tstep;
    tstep *= tstep2;
    if (env * tpow < tol) break;  // next term already under tolerance
    if (u == hard_cap) throw NonConvergence("6j limit series did not truncate", hard_cap);
  }
  return sum + comp;
}

Real sixj_infinity_sequence(const QContext& ctx, const TetLabels& L, ShiftPattern pattern,
                            const Real& tol, long k_ceiling) {
  // With e alone fixed, five labels grow, the summation endpoint M(k) moves
  // by 3k and the leading sign (-1)^M alternates with k; only the even-k
  // subsequence is parity-stable. The other patterns shift all parities
  // evenly, so a unit step is fine there.
  const long step = (pattern == ShiftPattern::kEFixed) ? 2 : 1;
  Real prev = sixj_unitary(ctx, L);
  for (long k = step; k <= k_ceiling; k += step) {
    Real cur = ctx.t_pow(-4 * k) * sixj_unitary(ctx, L.shifted(k, pattern));
    if (abs(cur - prev) < tol) return cur;
    prev = std::move(cur);
  }
  throw NonConvergence("renormalized 6j sequence failed the Cauchy criterion", k_ceiling);
}

}  // namespace

Real sixj_infinity(const QContext& ctx, const TetLabels& labels, LimitVariant variant,
                   const Real& tol, const LimitOptions& options) {
  if (!(tol > 0L)) throw InvalidInput("tol must be positive");
  switch (variant) {
    case LimitVariant::kAllGrow:
      return sixj_infinity_series(ctx, labels, tol);
    case LimitVariant::kEFixed:
    case LimitVariant::kEAndFFixed: {
      if (labels.a() + labels.c() != labels.b() + labels.d()) return ctx.zero();
      const auto pattern = variant == LimitVariant::kEFixed ? ShiftPattern::kEFixed
                                                            : ShiftPattern::kEAndFFixed;
      return sixj_infinity_sequence(ctx, labels, pattern, tol, options.k_ceiling);
    }
  }
  throw InvalidInput("bad limit variant");
}

}  // namespace tvsum
