#include "tvsum/exact.hpp"

#include "tvsum/errors.hpp"

namespace tvsum::exact {

Rational rpow(const Rational& base, long e) {
  if (e < 0) return 1 / rpow(base, -e);
  Rational r = 1, b = base;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

Real to_real(const Rational& x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.raw(), x.backend().data(), MPFR_RNDN);
  return r;
}

Evaluator::Evaluator(std::int64_t num, std::int64_t den) {
  if (den == 0 || num == 0 || (num < 0) != (den < 0)) {
    throw InvalidInput("exact oracle needs 0 < t < 1 as a nonzero rational");
  }
  t_ = Rational(num, den);
  if (t_ <= 0 || t_ >= 1) throw InvalidInput("exact oracle needs 0 < t < 1");
  p_ = t_ * t_;
  fact_.push_back(Rational(1));
}

Rational Evaluator::quantum_int(long n) {
  if (n < 0) throw InvalidInput("[n] needs n >= 0");
  if (n == 0) return Rational(0);
  // (p^n - p^-n) / (p - p^-1) = p^{-(n-1)} (p^{2n} - 1) / (p^2 - 1)
  return rpow(p_, -(n - 1)) * (rpow(p_, 2 * n) - 1) / (p_ * p_ - 1);
}

Rational Evaluator::quantum_delta(long n) {
  Rational v = quantum_int(n + 1);
  return (n % 2 == 0) ? v : -v;
}

const Rational& Evaluator::quantum_factorial(long n) {
  if (n < 0) throw InvalidInput("[n]! needs n >= 0");
  while (static_cast<long>(fact_.size()) <= n) {
    const long k = static_cast<long>(fact_.size());
    fact_.push_back(fact_.back() * quantum_int(k));
  }
  return fact_[static_cast<size_t>(n)];
}

Rational Evaluator::theta(long a, long b, long c) {
  const auto x = strand_numbers(a, b, c);
  const long T = (a + b + c) / 2;
  Rational r = quantum_factorial(T + 1);
  r *= quantum_factorial(x[0]);
  r *= quantum_factorial(x[1]);
  r *= quantum_factorial(x[2]);
  r /= quantum_factorial(a) * quantum_factorial(b) * quantum_factorial(c);
  return (T % 2 == 0) ? r : -r;
}

Rational Evaluator::tet(const TetLabels& L) {
  Rational pre = 1;
  for (const auto& t : L.vertex_triples()) {
    const auto x = strand_numbers(t[0], t[1], t[2]);
    pre *= quantum_factorial(x[0]);
    pre *= quantum_factorial(x[1]);
    pre *= quantum_factorial(x[2]);
  }
  for (long l : L.as_array()) pre /= quantum_factorial(l);

  const auto A = L.half_vertex_sums();
  const auto B = L.half_cycle_sums();
  Rational sum = 0;
  for (long s = L.s_lo(); s <= L.s_hi(); ++s) {
    Rational term = quantum_factorial(s + 1);
    for (long Bi : B) term /= quantum_factorial(Bi - s);
    for (long Aj : A) term /= quantum_factorial(s - Aj);
    sum += (s % 2 == 0) ? term : -term;
  }
  return pre * sum;
}

Rational Evaluator::theta_product(const TetLabels& L) {
  Rational r = 1;
  for (const auto& t : L.vertex_triples()) r *= theta(t[0], t[1], t[2]);
  return r;
}

}  // namespace tvsum::exact
