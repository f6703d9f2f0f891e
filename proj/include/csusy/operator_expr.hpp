#pragma once

#include <string>
#include <vector>

#include "csusy/gauss_poly_state.hpp"
#include "csusy/rational.hpp"
#include "csusy/system.hpp"

namespace csusy {

struct OperatorTerm {
  Rational coeff;
  Word word;
};

/// Formal linear combination  i^p * 2^(-s/2) * sum_t c_t * word_t.
///
/// Coefficients stay rational; the complex phase i^p and the sqrt(2) power s
/// are global to the expression. Sums are only formed between expressions
/// that are both real or both imaginary (phases equal mod 2; i^(p+2) is
/// absorbed as a sign) and share s, which is all the coupled SUSY
/// observables need.
class OperatorExpr {
 public:
  OperatorExpr() = default;

  static OperatorExpr identity(const Rational& c = 1);
  static OperatorExpr of(const Word& word, const Rational& c = 1);
  static OperatorExpr of(Generator g, const Rational& c = 1) { return of(Word{g}, c); }

  const std::vector<OperatorTerm>& terms() const { return terms_; }
  int i_power() const { return i_power_; }
  int sqrt2_power() const { return s_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t max_word_length() const;

  OperatorExpr times_i(int power = 1) const;
  OperatorExpr times_sqrt2_power(int extra) const;
  /// Formal adjoint: reversed words of adjoint generators, conjugated phase.
  OperatorExpr adjoint() const;

  /// Real part of the action: the true image is i^p times the result.
  GaussPolyState apply(const CoupledSusySystem& sys, const GaussPolyState& f) const;

  OperatorExpr& operator+=(const OperatorExpr& other);
  OperatorExpr& operator-=(const OperatorExpr& other);
  OperatorExpr& operator*=(const Rational& scalar);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(OperatorExpr a, const Rational& s) { return a *= s; }
  friend OperatorExpr operator*(const Rational& s, OperatorExpr a) { return a *= s; }
  /// Composition: (a * b) f = a(b f).
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

 private:
  void normalize();

  std::vector<OperatorTerm> terms_;
  int i_power_ = 0;
  int s_ = 0;
};

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

std::string to_string(const OperatorExpr& op);

}  // namespace csusy
