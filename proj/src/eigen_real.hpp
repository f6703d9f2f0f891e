#pragma once

// Eigen scalar traits for the MPFR-backed Real. Boost 1.74's own glue lacks
// infinity() and quiet_NaN(), which Eigen 3.4 needs.

#include <Eigen/Core>
#include <limits>

#include "csusy/real.hpp"

namespace Eigen {

template <>
struct NumTraits<csusy::Real> : GenericNumTraits<csusy::Real> {
  using Real = csusy::Real;
  using NonInteger = csusy::Real;
  using Nested = csusy::Real;
  using Literal = csusy::Real;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
  static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
  static Real dummy_precision() { return 1000 * epsilon(); }
  static Real highest() { return (std::numeric_limits<Real>::max)(); }
  static Real lowest() { return std::numeric_limits<Real>::lowest(); }
  static Real infinity() { return std::numeric_limits<Real>::infinity(); }
  static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
  static int digits10() { return static_cast<int>(Real::default_precision()); }
};

}  // namespace Eigen
