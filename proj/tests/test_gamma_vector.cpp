#include <gtest/gtest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "csusy/errors.hpp"
#include "csusy/gamma_vector.hpp"
#include "csusy/gauss_poly_state.hpp"

namespace csusy {
namespace {

// int_R x^j e^{-x^{2n}/n} dx by tanh-sinh-type quadrature on (0, inf).
double quadrature_moment(int n, int j) {
  if (j % 2 != 0) return 0.0;
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double x) {
    const double decay = std::pow(x, 2 * n) / n;
    return decay > 700 ? 0.0 : std::pow(x, j) * std::exp(-decay);
  };
  return 2 * integrator.integrate(f, 1e-15);
}

// Gamma(r/2n) n^{r/2n} from boost's own Gamma in 50-digit binary floats.
boost::multiprecision::cpp_bin_float_50 symbol_oracle(int n, int r) {
  using F = boost::multiprecision::cpp_bin_float_50;
  const F s = F(r) / (2 * n);
  return boost::math::tgamma(s) * pow(F(n), s);
}

TEST(GammaVector, MomentsMatchQuadrature) {
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= 12 * n; ++j) {
      const auto v = inner_product(GaussPolyState::monomial(n, j / 2), GaussPolyState::monomial(n, j - j / 2));
      const double expect = quadrature_moment(n, j);
      EXPECT_NEAR(to_double(v), expect, 1e-12 * std::max(1.0, std::abs(expect))) << "n=" << n << " j=" << j;
      EXPECT_EQ(v.is_exactly_zero(), j % 2 != 0);
    }
}

TEST(GammaVector, BaseSymbolsAtHighPrecision) {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r < 2 * n; r += 2) {
      const GammaVector g(n, {{r, Rational(1)}});
      const auto value = evaluate_gamma_vector(g, 1e-45, 4096);
      const auto oracle = symbol_oracle(n, r);
      const double rel = static_cast<double>(abs(boost::multiprecision::cpp_bin_float_50(value.value.str(60)) - oracle) / oracle);
      EXPECT_LT(rel, 1e-44) << "n=" << n << " r=" << r;
      EXPECT_LT(static_cast<double>(value.abs_error / value.value), 1e-45);
    }
}

TEST(GammaVector, KnownValues) {
  // <e^{-g}, e^{-g}> for n = 2 is Gamma(1/4) 2^{1/4} / 2.
  const auto v = inner_product(GaussPolyState::monomial(2, 0), GaussPolyState::monomial(2, 0));
  EXPECT_EQ(to_string(v), "2; 0; 1:1/2");
  EXPECT_NEAR(to_double(GammaVector(2, {{1, Rational(1)}})), std::tgamma(0.25) * std::pow(2.0, 0.25), 1e-14);
  // n = 1: Gaussian integral sqrt(pi).
  const auto h = inner_product(GaussPolyState::monomial(1, 0), GaussPolyState::monomial(1, 0));
  EXPECT_NEAR(to_double(h), std::sqrt(M_PI), 1e-15);
}

TEST(GammaVector, DivergenceDetected) {
  EXPECT_THROW(inner_product(GaussPolyState::monomial(2, -2), GaussPolyState::monomial(2, 0)), DivergenceError);
  EXPECT_THROW(inner_product(GaussPolyState::monomial(3, -3), GaussPolyState::monomial(3, -1)), DivergenceError);
  EXPECT_NO_THROW(inner_product(GaussPolyState::monomial(2, -1), GaussPolyState::monomial(2, 1)));
}

TEST(GammaVector, ExactRatio) {
  const GammaVector a(3, {{1, make_rational(2, 3)}, {5, make_rational(-1, 2)}});
  const auto r = exact_ratio(a * make_rational(7, 4), a);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->ratio, make_rational(7, 4));
  EXPECT_FALSE(exact_ratio(a + GammaVector(3, {{3, Rational(1)}}), a));
  EXPECT_FALSE(exact_ratio(a, GammaVector(3)));
  const auto s = exact_ratio(a.times_sqrt2_power(1), a);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->sqrt2_power, 1);
}

TEST(GammaVector, ArithmeticAndGuards) {
  const GammaVector a(2, {{1, Rational(1)}});
  const GammaVector b(2, {{3, Rational(2)}});
  EXPECT_EQ(a + b - b, a);
  EXPECT_TRUE((a - a).is_exactly_zero());
  EXPECT_THROW(a + a.times_sqrt2_power(1), IrrationalSumError);
  EXPECT_THROW(GammaVector(2, {{2, Rational(1)}}), std::invalid_argument);
  EXPECT_THROW(GammaVector(2, {{5, Rational(1)}}), std::invalid_argument);
  EXPECT_THROW(a + GammaVector(3, {{1, Rational(1)}}), FamilyMismatch);
  EXPECT_TRUE(a.confirm_nonzero());
}

TEST(GammaVector, TextRoundTrip) {
  const GammaVector a(4, {{1, make_rational(-3, 5)}, {7, Rational(9)}}, 1);
  EXPECT_EQ(parse_gamma_vector(to_string(a)), a);
  EXPECT_EQ(to_string(a), "4; 1; 1:-3/5, 7:9/1");
  EXPECT_THROW(parse_gamma_vector("4; 1; 2:1"), std::invalid_argument);
  EXPECT_THROW(parse_gamma_vector("4; 1"), std::invalid_argument);
}

TEST(GammaVector, EvaluationIsDeterministic) {
  const GammaVector a(3, {{1, make_rational(1, 3)}, {3, make_rational(-2, 7)}, {5, make_rational(5, 11)}});
  const auto x = evaluate_gamma_vector(a, 1e-30);
  const auto y = evaluate_gamma_vector(a, 1e-30);
  EXPECT_EQ(x.value, y.value);
  EXPECT_EQ(x.bits, y.bits);
}

}  // namespace
}  // namespace csusy
