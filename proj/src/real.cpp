#include "csusy/real.hpp"

#include <cmath>

namespace csusy {
namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace

unsigned bits_to_digits10(unsigned bits) {
  // Boost converts digits10 back to bits with some slack; round up so the
  // resulting mantissa is never narrower than requested.
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits)
    : lock_(precision_mutex()), saved_digits10_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

Real to_real(const Rational& value) {
  Real r;
  mpfr_set_q(r.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace csusy
