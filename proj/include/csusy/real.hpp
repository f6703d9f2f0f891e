#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <string>

#include "csusy/rational.hpp"

namespace csusy {

/// Variable-precision binary float (MPFR). Expression templates are off so
/// the type can be used as an Eigen scalar.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Sets the working precision of newly created Real values for the lifetime
/// of the scope. MPFR's default precision is process-wide, so scopes are
/// serialized through a recursive mutex; nested scopes on one thread are fine.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_digits10_;
};

unsigned bits_to_digits10(unsigned bits);

/// Correctly rounded conversion at the current working precision.
Real to_real(const Rational& value);

}  // namespace csusy
