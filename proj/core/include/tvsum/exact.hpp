#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <vector>

#include "tvsum/real.hpp"
#include "tvsum/tet_labels.hpp"

namespace tvsum::exact {

using Rational = boost::multiprecision::mpq_rational;

/// base^e for integer e (binary powering; exact).
Rational rpow(const Rational& base, long e);

/// Correctly rounded conversion.
Real to_real(const Rational& x, mpfr_prec_t prec);

/// Ground-truth evaluation of the quantum special functions at an exact
/// rational 0 < t < 1. Everything except the unitary 6j's square root is a
/// rational number. Not thread-safe (factorial memo); intended for golden
/// tests and the CLI's oracle mode, both single-threaded.
class Evaluator {
 public:
  Evaluator(std::int64_t num, std::int64_t den);

  const Rational& t() const { return t_; }

  Rational quantum_int(long n);
  Rational quantum_delta(long n);
  const Rational& quantum_factorial(long n);
  Rational theta(long a, long b, long c);
  Rational tet(const TetLabels& labels);
  /// Product of the four vertex thetas (the 6j radicand, sign included).
  Rational theta_product(const TetLabels& labels);

 private:
  Rational t_, p_;  // p = t^2
  std::vector<Rational> fact_;
};

}  // namespace tvsum::exact
