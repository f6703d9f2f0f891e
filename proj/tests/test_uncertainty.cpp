#include <gtest/gtest.h>

#include <cmath>

#include "csusy/coherent.hpp"
#include "csusy/errors.hpp"
#include "csusy/ladder.hpp"
#include "csusy/uncertainty.hpp"

namespace csusy {
namespace {

// Weight state |k, w> of su(1,1): L = -(g/2)(K+ + K-), A = (ig/2)(K+ - K-), so
//   <L^2> = <A^2> = (g^2/4) [(w+1)(w+2k) + w(w+2k-1)],  <L> = <A> = 0.
Rational variance_oracle(const CoupledSusySystem& sys, Sector s, int m) {
  const Rational g = sys.delta - sys.gamma;
  const Rational k = bargmann_index(sys, s);
  const Rational w(m - first_level(s));
  return g * g / 4 * ((w + 1) * (w + 2 * k) + w * (w + 2 * k - 1));
}

TEST(Uncertainty, EigenstateVariancesMatchWeightFormula) {
  for (int n = 1; n <= 3; ++n) {
    const auto sys = make_xn_system(n);
    for (Sector s : {Sector::PSI, Sector::PHI, Sector::PSI_TILDE, Sector::PHI_TILDE})
      for (int m = first_level(s); m <= 4; ++m) {
        const auto state = eigenstate(sys, s, m).state;
        const auto r = is_tilde(s) ? uncertainty_product_tilde(sys, state) : uncertainty_product_LA(sys, state);
        const auto expect = variance_oracle(sys, s, m);
        ASSERT_TRUE(r.variance1 && r.variance2) << name(s) << " m=" << m;
        EXPECT_EQ(*r.variance1, expect) << name(s) << " n=" << n << " m=" << m;
        EXPECT_EQ(*r.variance2, expect);
        EXPECT_NEAR(r.product, to_double(expect), 1e-12 * to_double(expect));
        EXPECT_TRUE(r.pass);
        EXPECT_NEAR(r.robertson_bound, r.robertson_closed_form, 1e-12 * std::max(1.0, r.robertson_bound));
      }
  }
}

TEST(Uncertainty, QuarticFirstExcitedValue) {
  const auto sys = make_xn_system(2);
  EXPECT_NEAR(uncertainty_product_LA(sys, eigenstate(sys, Sector::PSI, 1).state).product, 11.0, 1e-12);
}

TEST(Uncertainty, GroundStatesSaturateBounds) {
  for (int n = 1; n <= 4; ++n) {
    const auto sys = make_xn_system(n);
    const Rational g = sys.delta - sys.gamma;
    const auto la = uncertainty_product_LA(sys, eigenstate(sys, Sector::PSI, 0).state);
    EXPECT_EQ(la.lower_bound, g * (-sys.gamma) / 4);
    EXPECT_NEAR(la.product, to_double(la.lower_bound), 1e-12 * to_double(la.lower_bound));
    EXPECT_NEAR(la.equality_gap, 0.0, 1e-12 * to_double(la.lower_bound));
    const auto tl = uncertainty_product_tilde(sys, eigenstate(sys, Sector::PHI_TILDE, 0).state);
    EXPECT_EQ(tl.lower_bound, g * sys.delta / 4);
    EXPECT_NEAR(tl.product, to_double(tl.lower_bound), 1e-12 * to_double(tl.lower_bound));
  }
}

TEST(Uncertainty, ExcitedStatesAreStrictlyAbove) {
  const auto sys = make_xn_system(2);
  for (int m = 1; m <= 4; ++m) {
    const auto r = uncertainty_product_LA(sys, eigenstate(sys, Sector::PSI, m).state);
    EXPECT_GT(r.equality_gap, 1.0);
    EXPECT_GT(r.product, r.robertson_bound);
  }
  EXPECT_GT(uncertainty_product_LA(sys, eigenstate(sys, Sector::PHI, 0).state).equality_gap, 1.0);
  EXPECT_GT(uncertainty_product_tilde(sys, eigenstate(sys, Sector::PSI_TILDE, 1).state).equality_gap, 1.0);
}

TEST(Uncertainty, SuperpositionsRespectRobertson) {
  const auto sys = make_xn_system(2);
  const auto psi0 = eigenstate(sys, Sector::PSI, 0).state;
  const auto psi1 = eigenstate(sys, Sector::PSI, 1).state;
  const auto phi0 = eigenstate(sys, Sector::PHI, 0).state;
  for (const auto& f : {psi0 + psi1, psi0 * Rational(3) - psi1, psi0 + phi0, psi1 + phi0 * make_rational(2, 5)}) {
    const auto r = uncertainty_product_LA(sys, f);
    EXPECT_TRUE(r.pass);
    EXPECT_GE(r.product, to_double(r.lower_bound));
    EXPECT_GE(r.product, r.robertson_bound - 1e-12);
  }
}

TEST(Uncertainty, ExactExpectations) {
  const auto sys = make_xn_system(2);
  const auto psi1 = eigenstate(sys, Sector::PSI, 1).state;
  const auto l = expectation(sys, observable_expr(Observable::L), psi1);
  ASSERT_TRUE(l.exact);
  EXPECT_EQ(*l.exact, Rational(0));
  const auto n = expectation(sys, OperatorExpr::of(Word{Generator::ADAG, Generator::A}), psi1);
  ASSERT_TRUE(n.exact);
  EXPECT_EQ(*n.exact, Rational(4));
}

TEST(Uncertainty, SectorGuards) {
  const auto sys = make_xn_system(2);
  EXPECT_THROW(uncertainty_product_LA(sys, GaussPolyState::monomial(2, 2)), DomainError);
  EXPECT_THROW(uncertainty_product_tilde(sys, GaussPolyState::monomial(2, 0)), DomainError);
  EXPECT_NO_THROW(require_sector(GaussPolyState::monomial(2, 1), true));
  EXPECT_THROW(require_sector(GaussPolyState::monomial(2, 1), false), DomainError);
}

TEST(Uncertainty, ObservableCommutators) {
  for (int n = 1; n <= 3; ++n) {
    const auto report = verify_observable_commutators(make_xn_system(n), default_window(n));
    EXPECT_TRUE(report.pass) << "n=" << n;
    EXPECT_EQ(report.checks.size(), 6u);
  }
}

TEST(Uncertainty, DirectSumValidation) {
  const auto sys = make_xn_system(2);
  const auto psi0 = eigenstate(sys, Sector::PSI, 0).state;
  const auto tilde = eigenstate(sys, Sector::PHI_TILDE, 0).state;
  EXPECT_THROW(make_direct_sum(psi0, 1.0, tilde, 1.0), DomainError);
  EXPECT_THROW(make_direct_sum(tilde, 1.0, tilde, 0.0), DomainError);
  EXPECT_THROW(make_direct_sum(psi0, 0.6, GaussPolyState(2), 0.8), DomainError);
  EXPECT_NO_THROW(make_direct_sum(psi0, 0.6, tilde, 0.8));
}

TEST(Uncertainty, QuadraticXpAgainstOscillator) {
  // n = 1: X and P act as x and i d/dx off the diagonal, and psi_0 and
  // psi~_1 are the oscillator functions h_0 and h_1.
  const auto sys = make_xn_system(1);
  const auto h0 = eigenstate(sys, Sector::PSI, 0).state;
  const auto h1 = eigenstate(sys, Sector::PSI_TILDE, 1).state;
  const auto ground = uncertainty_product_XP(sys, make_direct_sum(h0, 1.0, h1, 0.0));
  EXPECT_NEAR(ground.product, 0.5, 1e-12);
  EXPECT_NEAR(ground.convex_bound, 0.5, 1e-15);
  const auto excited = uncertainty_product_XP(sys, make_direct_sum(h0, 0.0, h1, 1.0));
  EXPECT_NEAR(excited.product, 1.5, 1e-12);
  const double c = std::sqrt(0.5);
  const auto mixed = uncertainty_product_XP(sys, make_direct_sum(h0, c, h1, c));
  EXPECT_NEAR(std::abs(mixed.mean_x), std::sqrt(2.0) * 0.5, 1e-12);
  EXPECT_NEAR(mixed.mean_x2.real(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(mixed.mean_p), 0.0, 1e-12);
  EXPECT_NEAR(mixed.mean_p2.real(), 1.0, 1e-12);
  EXPECT_NEAR(mixed.product, std::sqrt(0.5), 1e-12);
  EXPECT_TRUE(mixed.pass);
}

TEST(Uncertainty, XpBoundIsConvexCombination) {
  const auto sys = make_xn_system(2);
  const auto psi = eigenstate(sys, Sector::PSI, 1).state;
  const auto tilde = eigenstate(sys, Sector::PHI_TILDE, 1).state;
  EXPECT_EQ(uncertainty_product_XP(sys, make_direct_sum(psi, 1, tilde, 0)).global_bound, make_rational(1, 2));
  for (double t : {0.0, 0.1, 0.35, 0.5, 0.8, 1.0}) {
    const auto r = uncertainty_product_XP(sys, make_direct_sum(psi, std::sqrt(t), tilde, std::sqrt(1 - t)));
    EXPECT_NEAR(r.convex_bound, 0.5 * (t * 1 + (1 - t) * 3), 1e-12);
    EXPECT_NEAR(r.robertson_bound, r.convex_bound, 1e-12);
    EXPECT_GE(r.product, r.convex_bound);
    EXPECT_GE(r.convex_bound, 0.5);
    EXPECT_TRUE(r.pass);
  }
}

TEST(Uncertainty, XpCommutatorBlocks) {
  const auto c = commutator(position_operator(), momentum_operator());
  EXPECT_TRUE(c.blocks[0][1].is_zero());
  EXPECT_TRUE(c.blocks[1][0].is_zero());
}

}  // namespace
}  // namespace csusy
