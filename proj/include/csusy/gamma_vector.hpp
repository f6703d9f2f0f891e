#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "csusy/gauss_poly_state.hpp"
#include "csusy/rational.hpp"
#include "csusy/real.hpp"

namespace csusy {

/// Exact value 2^(-w/2) * sum_r c_r * G_r with base symbols
/// G_r = Gamma(r/(2n)) * n^(r/(2n)), r odd in [1, 2n-1].
///
/// Inner products of GaussPolyStates land here. Like the states, the sqrt(2)
/// exponent w is canonical in {0, 1}.
class GammaVector {
 public:
  using CoeffMap = std::map<int, Rational>;

  explicit GammaVector(int n);
  GammaVector(int n, CoeffMap coeffs, int sqrt2_power = 0);

  int n() const { return n_; }
  int sqrt2_power() const { return w_; }
  const CoeffMap& coeffs() const { return coeffs_; }

  /// True iff the coefficient map is empty. A nonempty map may still have
  /// numeric value zero if the G_r satisfy a rational relation; see
  /// confirm_nonzero().
  bool is_exactly_zero() const { return coeffs_.empty(); }

  /// The coefficient map is nonempty and the numeric value exceeds 1e3 times
  /// its certified evaluation error.
  bool confirm_nonzero() const;

  GammaVector times_sqrt2_power(int extra) const;

  GammaVector& operator+=(const GammaVector& other);
  GammaVector& operator-=(const GammaVector& other);
  GammaVector& operator*=(const Rational& scalar);

  friend GammaVector operator+(GammaVector a, const GammaVector& b) { return a += b; }
  friend GammaVector operator-(GammaVector a, const GammaVector& b) { return a -= b; }
  friend GammaVector operator*(GammaVector a, const Rational& s) { return a *= s; }
  friend GammaVector operator*(const Rational& s, GammaVector a) { return a *= s; }

  friend bool operator==(const GammaVector& a, const GammaVector& b) {
    return a.n_ == b.n_ && a.w_ == b.w_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void canonicalize();
  void accumulate(const GammaVector& other, int sign);

  int n_;
  int w_ = 0;
  CoeffMap coeffs_;
};

/// Exact <f, g> over the real line. Both states are real, so the product is
/// symmetric. Throws FamilyMismatch, or DivergenceError when a nonzero
/// integrand term x^j has j <= -1.
GammaVector inner_product(const GaussPolyState& f, const GaussPolyState& g);

/// If b is nonzero and a == q * b for an exact scalar q (same base symbols in
/// the same ratio), returns q as a StateRatio (rational times 2^(-w/2)).
std::optional<StateRatio> exact_ratio(const GammaVector& a, const GammaVector& b);

struct GammaValue {
  Real value;
  /// Certified bound on |computed - exact|.
  Real abs_error;
  unsigned bits = 0;
};

/// Numeric value with relative error at most rel_precision (absolute error
/// bounded when the value is exactly zero). Precision is raised adaptively up
/// to max_bits; if cancellation prevents reaching the target there, the
/// result carries the honest error bound actually achieved.
GammaValue evaluate_gamma_vector(const GammaVector& v, double rel_precision = 1e-14,
                                 unsigned max_bits = 8192);

/// Convenience: double value at the default 1e-14 relative precision.
double to_double(const GammaVector& v);

/// Canonical text form `n; w; r1:c1, r2:c2, ...`.
std::string to_string(const GammaVector& v);
GammaVector parse_gamma_vector(std::string_view text);

}  // namespace csusy
