#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "csusy/errors.hpp"
#include "csusy/gamma_vector.hpp"
#include "csusy/gauss_poly_state.hpp"
#include "csusy/system.hpp"

namespace csusy {
namespace {

using G = Generator;

// Hand-differentiated oracle for the generators on x^k e^{-x^{2n}/(2n)}:
//   a  = (x^{1-n} D + x^n)/sqrt2             b  = (-x^{1-n} D + x^n)/sqrt2
//   a† = (-D x^{1-n} + x^n)/sqrt2            b† = (D x^{1-n} + x^n)/sqrt2
// with D (x^{1-n} f) = x^{1-n} f' + (1-n) x^{-n} f.
long double generator_oracle(G g, int n, int k, long double x) {
  const long double weight = std::exp(-std::pow(x, 2 * n) / (2 * n));
  const long double f = std::pow(x, k) * weight;
  const long double df = (k * std::pow(x, k - 1) - std::pow(x, k + 2 * n - 1)) * weight;
  const long double lift = std::pow(x, 1 - n) * df;
  const long double extra = (1 - n) * std::pow(x, -n) * f;
  const long double mult = std::pow(x, n) * f;
  long double v = 0;
  switch (g) {
    case G::A: v = lift + mult; break;
    case G::B: v = -lift + mult; break;
    case G::ADAG: v = -(lift + extra) + mult; break;
    case G::BDAG: v = lift + extra + mult; break;
  }
  return v / std::sqrt(2.0L);
}

GaussPolyState random_state(std::mt19937& rng, int n, int lo, int hi, int terms) {
  std::uniform_int_distribution<int> exp(lo, hi), num(-9, 9), den(1, 5);
  GaussPolyState s(n);
  for (int i = 0; i < terms; ++i) s += GaussPolyState::monomial(n, exp(rng), make_rational(num(rng), den(rng)));
  return s;
}

TEST(GaussCalculus, GeneratorsMatchHandDerivative) {
  for (int n = 1; n <= 4; ++n) {
    const auto sys = make_xn_system(n);
    for (G g : {G::A, G::ADAG, G::B, G::BDAG})
      for (int k = -6; k <= 12; ++k) {
        const auto image = apply_generator(sys, g, GaussPolyState::monomial(n, k));
        for (long double x : {-1.7L, -0.6L, 0.35L, 0.9L, 1.3L}) {
          const long double expect = generator_oracle(g, n, k, x);
          EXPECT_NEAR(image.evaluate(static_cast<double>(x)), static_cast<double>(expect),
                      1e-12 * std::max(1.0L, std::abs(expect)))
              << name(g) << " n=" << n << " k=" << k << " x=" << static_cast<double>(x);
        }
      }
  }
}

TEST(GaussCalculus, GroundStates) {
  for (int n = 1; n <= 6; ++n) {
    const auto sys = make_xn_system(n);
    EXPECT_TRUE(apply_generator(sys, G::A, GaussPolyState::monomial(n, 0)).is_zero());
    const auto phi = GaussPolyState::monomial(n, 2 * n - 1);
    EXPECT_FALSE(apply_generator(sys, G::A, phi).is_zero());
    EXPECT_TRUE(apply_generator(sys, G::BDAG, apply_generator(sys, G::A, phi)).is_zero());
  }
}

TEST(GaussCalculus, WordsComposeRightToLeft) {
  const auto sys = make_xn_system(2);
  const auto f = GaussPolyState::monomial(2, 3);
  EXPECT_EQ(apply_word(sys, {G::ADAG, G::B}, f), apply_generator(sys, G::ADAG, apply_generator(sys, G::B, f)));
  EXPECT_EQ(apply_word(sys, {}, f), f);
  EXPECT_EQ(to_string(apply_word(sys, {G::ADAG, G::B}, GaussPolyState::monomial(2, 0))), "2; 0; 0:-1/1, 4:2/1");
  EXPECT_EQ(parse_word("ADAG*B"), (Word{G::ADAG, G::B}));
  EXPECT_EQ(to_string(Word{}), "I");
}

TEST(GaussCalculus, Linearity) {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n) {
    const auto sys = make_xn_system(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_state(rng, n, -4, 12, 4);
      const auto g = random_state(rng, n, -4, 12, 4);
      const Rational c = make_rational(trial - 7, 3);
      for (G op : {G::A, G::ADAG, G::B, G::BDAG})
        EXPECT_EQ(apply_generator(sys, op, f + g * c),
                  apply_generator(sys, op, f) + apply_generator(sys, op, g) * c);
    }
  }
}

TEST(GaussCalculus, AdjointPairsAreAdjoint) {
  // <f, op g> == <op† f, g> on states whose images stay integrable.
  std::mt19937 rng(11);
  for (int n = 1; n <= 4; ++n) {
    const auto sys = make_xn_system(n);
    for (int trial = 0; trial < 15; ++trial) {
      const auto f = random_state(rng, n, n, 6 * n, 3);
      const auto g = random_state(rng, n, n, 6 * n, 3);
      for (G op : {G::A, G::ADAG, G::B, G::BDAG})
        EXPECT_EQ(inner_product(f, apply_generator(sys, op, g)), inner_product(apply_generator(sys, adjoint(op), f), g))
            << name(op) << " n=" << n;
    }
  }
}

TEST(GaussCalculus, InnerProductBilinearSymmetricPositive) {
  std::mt19937 rng(3);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_state(rng, n, 0, 8 * n, 4);
      const auto g = random_state(rng, n, 0, 8 * n, 4);
      const auto h = random_state(rng, n, 0, 8 * n, 4);
      const Rational c = make_rational(trial + 1, 4);
      EXPECT_EQ(inner_product(f, g), inner_product(g, f));
      EXPECT_EQ(inner_product(f + h * c, g), inner_product(f, g) + inner_product(h, g) * c);
      if (!f.is_zero()) {
        EXPECT_GT(to_double(inner_product(f, f)), 0.0);
      }
    }
}

TEST(GaussCalculus, ProportionalityIsExact) {
  const auto f = GaussPolyState::monomial(2, 0, 3) + GaussPolyState::monomial(2, 4, -1);
  const auto r = proportionality(f * make_rational(-5, 7), f);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->ratio, make_rational(-5, 7));
  EXPECT_EQ(r->sqrt2_power, 0);
  EXPECT_FALSE(proportionality(f + GaussPolyState::monomial(2, 1), f));
  const auto s = proportionality(f.times_sqrt2_power(1), f);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->sqrt2_power, 1);
}

TEST(GaussCalculus, Sqrt2Bookkeeping) {
  const auto f = GaussPolyState::monomial(1, 2);
  EXPECT_EQ(f.times_sqrt2_power(2), f * make_rational(1, 2));
  EXPECT_EQ(f.times_sqrt2_power(-2), f * Rational(2));
  EXPECT_THROW(f + f.times_sqrt2_power(1), IrrationalSumError);
  EXPECT_NEAR(f.times_sqrt2_power(1).evaluate(0.8), f.evaluate(0.8) / std::sqrt(2.0), 1e-15);
}

TEST(GaussCalculus, FamilyMismatchRejected) {
  EXPECT_THROW(GaussPolyState::monomial(1, 0) + GaussPolyState::monomial(2, 0), FamilyMismatch);
  EXPECT_THROW(inner_product(GaussPolyState::monomial(1, 0), GaussPolyState::monomial(2, 0)), FamilyMismatch);
}

TEST(GaussCalculus, TextRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 4;
    const auto s = random_state(rng, n, -6, 20, 5).times_sqrt2_power(trial % 2);
    EXPECT_EQ(parse_state(to_string(s)), s) << to_string(s);
  }
  EXPECT_EQ(parse_state("3; 0; "), GaussPolyState(3));
  for (const char* bad : {"", "0; 0; 1:1", "2; 0; 1", "2; 0; x:1/2", "2; 0; 1:1/0"})
    EXPECT_THROW(parse_state(bad), std::invalid_argument) << bad;
}

}  // namespace
}  // namespace csusy
