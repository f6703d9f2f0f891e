#pragma once

#include <stdexcept>

namespace csusy {

/// Operands belong to different members of the x^n family.
class FamilyMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An inner product whose integrand is not integrable at x = 0.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sum of two exact values whose implicit 2^(-w/2) factors differ by an odd
/// power of sqrt(2); the result is not representable with rational
/// coefficients.
class IrrationalSumError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// State or parameter outside an operation's domain (wrong residue class,
/// |z| >= 1, broken system, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numeric evaluation at the requested precision lost a required property
/// (e.g. positive definiteness of a Gram matrix).
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace csusy
