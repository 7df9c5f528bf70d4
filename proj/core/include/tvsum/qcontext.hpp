#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvsum/real.hpp"

namespace tvsum {

/// Evaluation context for a fixed real parameter 0 < t < 1, q = t^4.
///
/// All derived quantities are computed at work_prec() = precision_bits + 32
/// guard bits so that results are good to the advertised precision_bits even
/// after passing through log/exp magnitude bookkeeping.
///
/// The (q;q)_n table saturates: past the first n where the remaining infinite
/// tail is below one working ulp, (q;q)_n equals (q;q)_inf to working
/// precision. The whole table is therefore precomputed at construction and
/// the context is immutable afterwards; concurrent readers need no locking.
class QContext {
 public:
  struct QQInf {
    Real value;           // truncated product; upper end of the enclosure
    Real log_tail_bound;  // bound on |log tail|: sum_{i>n*} q^i/(1-q^i)
    Real eps;             // half... conservative enclosure: truth in [value-eps, value]
  };

  static QContext from_decimal(const std::string& t_text, unsigned precision_bits);
  static QContext from_rational(std::int64_t num, std::int64_t den, unsigned precision_bits);
  /// Accepts "p/q" (exact-rational mode) or a decimal literal.
  static QContext parse(const std::string& t_text, unsigned precision_bits);

  unsigned precision_bits() const { return precision_bits_; }
  mpfr_prec_t work_prec() const { return static_cast<mpfr_prec_t>(precision_bits_) + 32; }

  const Real& t() const { return t_; }
  const Real& q() const { return q_; }
  const Real& one_minus_q() const { return one_minus_q_; }
  const Real& log_t() const { return log_t_; }
  const Real& log_one_minus_q() const { return log_one_minus_q_; }

  bool has_exact_t() const { return exact_num_.has_value(); }
  std::int64_t exact_num() const { return *exact_num_; }
  std::int64_t exact_den() const { return *exact_den_; }

  /// (q;q)_n, saturating to (q;q)_inf once the tail is below working precision.
  const Real& qq(long n) const;
  const Real& log_qq(long n) const;
  const QQInf& qq_inf() const { return qq_inf_; }
  long qq_saturation_index() const { return static_cast<long>(qq_.size()) - 1; }

  /// K(t) = (1-q)/((q;q)_inf)^9 using the lower end of the (q;q)_inf
  /// enclosure, so that K is an upper bound of the true constant.
  const Real& k_constant() const { return k_constant_; }

  Real t_pow(long e) const { return pow_si(t_, e); }
  Real zero() const { return Real(work_prec()); }
  Real one() const { return Real::of(1L, work_prec()); }

 private:
  QContext() = default;
  void init(Real t, unsigned precision_bits);

  unsigned precision_bits_ = 128;
  Real t_, q_, one_minus_q_, log_t_, log_one_minus_q_;
  std::optional<std::int64_t> exact_num_, exact_den_;
  std::vector<Real> qq_;      // qq_[n] = (q;q)_n, n = 0..n*
  std::vector<Real> log_qq_;
  QQInf qq_inf_;
  Real k_constant_;
};

}  // namespace tvsum
