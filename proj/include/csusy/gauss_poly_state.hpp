#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "csusy/rational.hpp"

namespace csusy {

/// Exact function 2^(-w/2) * sum_k c_k x^k * exp(-x^(2n)/(2n)).
///
/// Exponents may be negative (some generators leave the polynomial towers);
/// zero coefficients are never stored. The sqrt(2) bookkeeping exponent w is
/// kept canonical in {0, 1}: even powers are folded into the coefficients, so
/// structural equality is value equality.
class GaussPolyState {
 public:
  using TermMap = std::map<int, Rational>;

  explicit GaussPolyState(int n);
  GaussPolyState(int n, TermMap terms, int sqrt2_power = 0);

  static GaussPolyState monomial(int n, int exponent, const Rational& coefficient = 1);

  int n() const { return n_; }
  /// w in the global factor 2^(-w/2); always 0 or 1.
  int sqrt2_power() const { return w_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(int exponent) const;
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;
  /// Exponent residues mod 2n that occur in the state.
  std::set<int> residues() const;

  /// Multiplies by 2^(-extra/2).
  GaussPolyState times_sqrt2_power(int extra) const;

  GaussPolyState& operator+=(const GaussPolyState& other);
  GaussPolyState& operator-=(const GaussPolyState& other);
  GaussPolyState& operator*=(const Rational& scalar);

  friend GaussPolyState operator+(GaussPolyState lhs, const GaussPolyState& rhs) { return lhs += rhs; }
  friend GaussPolyState operator-(GaussPolyState lhs, const GaussPolyState& rhs) { return lhs -= rhs; }
  friend GaussPolyState operator*(GaussPolyState lhs, const Rational& s) { return lhs *= s; }
  friend GaussPolyState operator*(const Rational& s, GaussPolyState rhs) { return rhs *= s; }
  GaussPolyState operator-() const;

  friend bool operator==(const GaussPolyState& a, const GaussPolyState& b) {
    return a.n_ == b.n_ && a.w_ == b.w_ && a.terms_ == b.terms_;
  }

  /// Point value, evaluated in extended precision and rounded to double.
  double evaluate(double x) const;

 private:
  void canonicalize();
  void accumulate(const GaussPolyState& other, int sign);

  int n_;
  int w_ = 0;
  TermMap terms_;
};

/// Exact scalar relating two states: f = ratio * 2^(-sqrt2_power/2) * g.
struct StateRatio {
  Rational ratio;
  int sqrt2_power = 0;
};

/// Returns the scalar s with f == s * g if the states are exactly
/// proportional (g nonzero). The candidate comes from the coefficients at the
/// largest exponent of g and is then checked by exact equality.
std::optional<StateRatio> proportionality(const GaussPolyState& f, const GaussPolyState& g);

/// Canonical text form `n; w; k1:c1, k2:c2, ...` with exponent-sorted terms.
std::string to_string(const GaussPolyState& state);
GaussPolyState parse_state(std::string_view text);

}  // namespace csusy
