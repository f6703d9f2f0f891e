#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "csusy/gauss_poly_state.hpp"
#include "csusy/rational.hpp"

namespace csusy {

/// The four first-order generators a, a†, b, b†.
enum class Generator { A, ADAG, B, BDAG };

std::string_view name(Generator g);
Generator parse_generator(std::string_view text);
Generator adjoint(Generator g);

/// Composition word written in operator order: {ADAG, B} is a†b, applied to a
/// state right-to-left (b first).
using Word = std::vector<Generator>;

std::string to_string(const Word& word);
/// Parses words like "ADAG*B" or "ADAG B"; the empty string is the identity.
Word parse_word(std::string_view text);

/// Per-monomial action of one generator on x^k e^{-g}:
///   x^k -> 2^(-1/2) [ (slope*k + offset) x^(k-n) + raise * x^(k+n) ].
/// Every generator of the x^n family has this shape.
struct GeneratorRule {
  Rational slope;
  Rational offset;
  Rational raise;

  friend bool operator==(const GeneratorRule&, const GeneratorRule&) = default;
};

/// Coupled SUSY quadruple (a, b, gamma, delta) for one member of the x^n
/// family, with the generator rules it acts by.
struct CoupledSusySystem {
  int n = 1;
  Rational gamma;
  Rational delta;
  std::array<GeneratorRule, 4> rules;
  /// Broken systems are representable but cannot be constructed through
  /// make_xn_system(); operations that need ground states reject them.
  bool broken = false;

  const GeneratorRule& rule(Generator g) const { return rules[static_cast<std::size_t>(g)]; }
  Rational gap() const { return delta - gamma; }

  /// Copy with one generator rule replaced (mutation testing).
  CoupledSusySystem with_rule(Generator g, GeneratorRule rule) const;
};

/// a_n = 2^(-1/2)(x^(1-n) d/dx + x^n), b_n = 2^(-1/2)(-x^(1-n) d/dx + x^n) and
/// their adjoints, with gamma = -1 and delta = 2n - 1. Throws
/// std::invalid_argument for n < 1.
CoupledSusySystem make_xn_system(int n);

GaussPolyState apply_generator(const CoupledSusySystem& sys, Generator g, const GaussPolyState& f);

/// Right-to-left composition of apply_generator. The empty word is the
/// identity.
GaussPolyState apply_word(const CoupledSusySystem& sys, const Word& word, const GaussPolyState& f);

}  // namespace csusy
