#include "tvsum/real.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace tvsum {

Real Real::parse(const std::string& text, mpfr_prec_t prec) {
  Real r(prec);
  if (text.empty() || mpfr_set_str(r.raw(), text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
  return r;
}

std::string Real::str(int digits) const {
  if (digits < 2) digits = 2;
  // %Re prints one digit before the point; digits-1 after.
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

}  // namespace tvsum
