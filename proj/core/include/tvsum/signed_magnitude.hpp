#pragma once

#include "tvsum/real.hpp"

namespace tvsum {

/// Sign + natural-log magnitude. Products of quantized factorials grow like
/// t^{-n(n-1)}, far past any fixed exponent range at large colors, so chained
/// products are carried in log space: signs multiply, logs add.
struct SignedMagnitude {
  int sign = 0;              // -1, 0, +1
  Real log_magnitude;        // ln |value|; ignored when sign == 0

  SignedMagnitude() = default;
  SignedMagnitude(int s, Real log_mag) : sign(s), log_magnitude(std::move(log_mag)) {}

  static SignedMagnitude one(mpfr_prec_t prec) { return {1, Real(prec)}; }
  static SignedMagnitude zero(mpfr_prec_t prec) { return {0, Real(prec)}; }
  static SignedMagnitude from_real(const Real& x) {
    int s = x.sign();
    if (s == 0) return zero(x.precision());
    return {s, log(abs(x))};
  }

  SignedMagnitude& operator*=(const SignedMagnitude& o) {
    sign *= o.sign;
    if (sign != 0) log_magnitude += o.log_magnitude;
    return *this;
  }
  SignedMagnitude& operator/=(const SignedMagnitude& o) {
    sign *= o.sign;  // division by zero surfaces as sign 0 with stale log; callers guard
    if (sign != 0) log_magnitude -= o.log_magnitude;
    return *this;
  }
  friend SignedMagnitude operator*(SignedMagnitude a, const SignedMagnitude& b) { a *= b; return a; }
  friend SignedMagnitude operator/(SignedMagnitude a, const SignedMagnitude& b) { a /= b; return a; }

  SignedMagnitude pow(long e) const {
    if (sign == 0) return *this;
    SignedMagnitude r = *this;
    r.sign = (e % 2 == 0) ? 1 : sign;
    r.log_magnitude = log_magnitude * e;
    return r;
  }

  /// Lossless back to a plain value whenever the magnitude fits the working
  /// exponent range (with MPFR that is effectively always).
  Real value() const {
    if (sign == 0) return Real(log_magnitude.precision());
    Real v = exp(log_magnitude);
    if (sign < 0) v.negate();
    return v;
  }
};

}  // namespace tvsum
