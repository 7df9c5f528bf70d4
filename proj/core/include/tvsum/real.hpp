#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace tvsum {

/// Arbitrary-precision real backed by MPFR. Every value carries its own
/// mantissa width; binary operations round to the wider of the two operand
/// precisions (round-to-nearest), so results are bit-deterministic and
/// independent of evaluation thread.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  /// Parses a decimal string at the given precision. Throws on garbage.
  static Real parse(const std::string& text, mpfr_prec_t prec);
  /// num/den as a correctly rounded quotient.
  static Real ratio(long num, long den, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, num, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  Real at_precision(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Deterministic scientific rendering with `digits` significant digits.
  std::string str(int digits = 25) const;

  Real& operator+=(const Real& o) { bump(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { bump(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { bump(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { bump(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator/=(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator+=(long x) { mpfr_add_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator-=(long x) { mpfr_sub_si(v_, v_, x, MPFR_RNDN); return *this; }

  friend Real operator+(Real a, const Real& b) { a += b; return a; }
  friend Real operator-(Real a, const Real& b) { a -= b; return a; }
  friend Real operator*(Real a, const Real& b) { a *= b; return a; }
  friend Real operator/(Real a, const Real& b) { a /= b; return a; }
  friend Real operator*(Real a, long b) { a *= b; return a; }
  friend Real operator/(Real a, long b) { a /= b; return a; }
  friend Real operator+(Real a, long b) { a += b; return a; }
  friend Real operator-(Real a, long b) { a -= b; return a; }
  friend Real operator-(Real a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

  void negate() { mpfr_neg(v_, v_, MPFR_RNDN); }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  friend Real abs(Real a) { mpfr_abs(a.v_, a.v_, MPFR_RNDN); return a; }
  friend Real sqrt(Real a) { mpfr_sqrt(a.v_, a.v_, MPFR_RNDN); return a; }
  friend Real exp(Real a) { mpfr_exp(a.v_, a.v_, MPFR_RNDN); return a; }
  friend Real log(Real a) { mpfr_log(a.v_, a.v_, MPFR_RNDN); return a; }
  friend Real expm1(Real a) { mpfr_expm1(a.v_, a.v_, MPFR_RNDN); return a; }
  /// a^e for integer e (exact binary powering under one rounding per step).
  friend Real pow_si(const Real& a, long e) {
    Real r(mpfr_get_prec(a.v_));
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
  friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  // Widen the destination before a compound op so the result keeps the
  // larger operand precision.
  void bump(const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
      mpfr_t tmp;
      mpfr_init2(tmp, mpfr_get_prec(o.v_));
      mpfr_set(tmp, v_, MPFR_RNDN);
      mpfr_swap(tmp, v_);
      mpfr_clear(tmp);
    }
  }

  mpfr_t v_;
};

/// Neumaier-compensated accumulation: sum += term, with carry kept in comp.
inline void compensated_add(Real& sum, Real& comp, const Real& term) {
  Real t = sum + term;
  if (abs(sum) >= abs(term)) {
    comp += (sum - t) + term;
  } else {
    comp += (term - t) + sum;
  }
  sum = std::move(t);
}

}  // namespace tvsum
