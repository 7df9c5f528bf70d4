#include "tvsum/qcontext.hpp"

#include <cstdlib>

#include "tvsum/errors.hpp"

namespace tvsum {

QContext QContext::from_decimal(const std::string& t_text, unsigned precision_bits) {
  QContext ctx;
  ctx.init(Real::parse(t_text, static_cast<mpfr_prec_t>(precision_bits) + 32), precision_bits);
  return ctx;
}

QContext QContext::from_rational(std::int64_t num, std::int64_t den, unsigned precision_bits) {
  if (den == 0) throw InvalidInput("rational t has zero denominator");
  QContext ctx;
  ctx.init(Real::ratio(num, den, static_cast<mpfr_prec_t>(precision_bits) + 32), precision_bits);
  ctx.exact_num_ = num;
  ctx.exact_den_ = den;
  return ctx;
}

QContext QContext::parse(const std::string& t_text, unsigned precision_bits) {
  auto slash = t_text.find('/');
  if (slash == std::string::npos) return from_decimal(t_text, precision_bits);
  char* end = nullptr;
  const std::string num_s = t_text.substr(0, slash), den_s = t_text.substr(slash + 1);
  std::int64_t num = std::strtoll(num_s.c_str(), &end, 10);
  if (end == num_s.c_str() || *end != '\0') throw InvalidInput("bad rational: " + t_text);
  std::int64_t den = std::strtoll(den_s.c_str(), &end, 10);
  if (end == den_s.c_str() || *end != '\0') throw InvalidInput("bad rational: " + t_text);
  return from_rational(num, den, precision_bits);
}

void QContext::init(Real t, unsigned precision_bits) {
  if (precision_bits < 16) throw InvalidInput("precision_bits too small");
  precision_bits_ = precision_bits;
  if (!(t > 0L) || !(t < 1L)) throw InvalidInput("t must satisfy 0 < t < 1");
  t_ = std::move(t);
  q_ = pow_si(t_, 4);
  one_minus_q_ = Real::of(1L, work_prec()) - q_;
  log_t_ = log(t_);
  log_one_minus_q_ = log(one_minus_q_);

  // ulp threshold 2^-work_prec for the saturation rule.
  Real ulp = Real::of(1L, work_prec());
  for (mpfr_prec_t i = 0; i < work_prec(); ++i) ulp /= 2L;

  // (q;q)_0 = 1; (q;q)_n = (q;q)_{n-1} * (1 - q^n). Stop at the first n where
  // q^{n+1} / ((1-q)(1-q^{n+1})) < ulp; from there on (q;q)_n == (q;q)_inf to
  // working precision.
  qq_.push_back(one());
  log_qq_.push_back(zero());
  Real qpow = q_;  // q^n for n = current size
  const long hard_cap = 2'000'000;
  for (long n = 1; n <= hard_cap; ++n) {
    qq_.push_back(qq_.back() * (one() - qpow));
    log_qq_.push_back(log(qq_.back()));
    qpow *= q_;
    // qpow is now q^{n+1}
    Real tail = qpow / (one_minus_q_ * (one() - qpow));
    if (tail < ulp) {
      qq_inf_.value = qq_.back();
      qq_inf_.log_tail_bound = tail;
      // truth in [value * e^{-tail}, value]; 1 - e^{-x} <= x gives a
      // conservative nonzero enclosure width even when x underflows the ulp.
      qq_inf_.eps = qq_inf_.value * tail;
      break;
    }
    if (n == hard_cap) throw InvalidInput("t too close to 1: (q;q)_inf does not truncate");
  }

  const Real lower = qq_inf_.value * exp(-qq_inf_.log_tail_bound);
  k_constant_ = one_minus_q_ / pow_si(lower, 9);
}

const Real& QContext::qq(long n) const {
  if (n < 0) throw InvalidInput("(q;q)_n needs n >= 0");
  const long cap = static_cast<long>(qq_.size()) - 1;
  return qq_[static_cast<size_t>(n <= cap ? n : cap)];
}

const Real& QContext::log_qq(long n) const {
  if (n < 0) throw InvalidInput("(q;q)_n needs n >= 0");
  const long cap = static_cast<long>(log_qq_.size()) - 1;
  return log_qq_[static_cast<size_t>(n <= cap ? n : cap)];
}

}  // namespace tvsum
