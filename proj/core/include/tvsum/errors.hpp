#pragma once

#include <stdexcept>
#include <string>

namespace tvsum {

/// Bad user input: inadmissible labels, malformed files, out-of-range values.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A limit sequence failed its Cauchy criterion within the configured ceiling.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, long k_ceiling)
      : std::runtime_error(what), k_ceiling(k_ceiling) {}
  long k_ceiling;
};

/// A condition that admissible input cannot produce; indicates a defect.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tvsum
