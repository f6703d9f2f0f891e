#include <gtest/gtest.h>

#include <boost/math/special_functions/hermite.hpp>
#include <cmath>

#include "csusy/errors.hpp"
#include "csusy/ladder.hpp"

namespace csusy {
namespace {

TEST(Ladder, EigenEquationsHoldExactly) {
  for (int n = 1; n <= 3; ++n) {
    const auto sys = make_xn_system(n);
    for (Sector s : {Sector::PSI, Sector::PHI, Sector::PSI_TILDE, Sector::PHI_TILDE})
      for (const auto& rec : tower(sys, s, 8)) {
        EXPECT_TRUE(satisfies_eigen_equation(sys, rec)) << name(s) << " n=" << n << " m=" << rec.m;
        EXPECT_EQ(rec.eigenvalue, tower_eigenvalue(sys, s, rec.m));
        for (int r : rec.state.residues()) EXPECT_EQ(r, sector_residue(n, s));
      }
  }
}

TEST(Ladder, EigenvaluesAreTheFamilyLadder) {
  // {2kn} and {2kn + 2n - 1}.
  for (int n = 1; n <= 3; ++n) {
    const auto sys = make_xn_system(n);
    for (int m = 0; m <= 8; ++m) {
      EXPECT_EQ(tower_eigenvalue(sys, Sector::PSI, m), Rational(2 * m * n));
      EXPECT_EQ(tower_eigenvalue(sys, Sector::PHI, m), Rational(2 * m * n + 2 * n - 1));
    }
  }
}

TEST(Ladder, GroundStates) {
  const auto sys = make_xn_system(2);
  const auto [psi, phi] = ground_states(sys);
  EXPECT_EQ(to_string(psi.state), "2; 0; 0:1/1");
  EXPECT_EQ(to_string(phi.state), "2; 0; 3:1/1");
  EXPECT_EQ(psi.eigenvalue, Rational(0));
  EXPECT_EQ(phi.eigenvalue, Rational(3));
  auto broken = sys;
  broken.broken = true;
  EXPECT_THROW(ground_states(broken), DomainError);
}

TEST(Ladder, PsiTildeZeroDoesNotExist) {
  const auto sys = make_xn_system(2);
  EXPECT_THROW(eigenstate(sys, Sector::PSI_TILDE, 0), DomainError);
  EXPECT_THROW(eigenstate(sys, Sector::PSI, -1), DomainError);
  EXPECT_EQ(eigenstate(sys, Sector::PSI_TILDE, 1).m, 1);
}

TEST(Ladder, ClosedFormMatchesTowers) {
  for (int n = 1; n <= 3; ++n) {
    const auto sys = make_xn_system(n);
    for (int m = 0; m <= 5; ++m) {
      const auto even = proportionality(closed_form_eigenstate(n, Branch::Even, m), eigenstate(sys, Sector::PSI, m).state);
      const auto odd = proportionality(closed_form_eigenstate(n, Branch::Odd, m), eigenstate(sys, Sector::PHI, m).state);
      EXPECT_TRUE(even) << "n=" << n << " m=" << m;
      EXPECT_TRUE(odd) << "n=" << n << " m=" << m;
    }
  }
}

TEST(Ladder, HermiteFunctionsForQuadraticCase) {
  // n = 1: tower states are h_{2m}, h_{2m+1} up to normalization.
  const auto sys = make_xn_system(1);
  for (int m = 0; m <= 5; ++m)
    for (Sector s : {Sector::PSI, Sector::PHI}) {
      const auto rec = eigenstate(sys, s, m);
      const unsigned order = static_cast<unsigned>(2 * m + (s == Sector::PHI ? 1 : 0));
      const double norm = std::sqrt(std::pow(2.0, order) * std::tgamma(order + 1.0) * std::sqrt(M_PI));
      double sign = 0;
      for (double x : {-2.1, -0.7, 0.3, 1.1, 2.6}) {
        const double hermite = boost::math::hermite(order, x) * std::exp(-x * x / 2) / norm;
        const double mine = sample_normalized(rec, {x})[0];
        if (sign == 0) sign = (mine * hermite) > 0 ? 1 : -1;
        EXPECT_NEAR(mine, sign * hermite, 1e-12) << "order " << order << " x=" << x;
      }
    }
}

TEST(Ladder, GramMatrixIsDiagonal) {
  const auto sys = make_xn_system(2);
  std::vector<EigenstateRecord> records;
  for (Sector s : {Sector::PSI, Sector::PHI})
    for (int m = 0; m <= 3; ++m) records.push_back(eigenstate(sys, s, m));
  const auto gram = gram_matrix(records);
  ASSERT_EQ(gram.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      if (i == j) {
        EXPECT_TRUE(gram[i][j].confirm_nonzero());
        EXPECT_EQ(gram[i][j], records[i].norm_sq);
      } else {
        EXPECT_TRUE(gram[i][j].is_exactly_zero()) << i << "," << j << ": " << to_string(gram[i][j]);
      }
    }
}

TEST(Ladder, TildeTowersOrthogonal) {
  const auto sys = make_xn_system(3);
  std::vector<EigenstateRecord> records;
  for (int m = 1; m <= 4; ++m) records.push_back(eigenstate(sys, Sector::PSI_TILDE, m));
  for (int m = 0; m <= 3; ++m) records.push_back(eigenstate(sys, Sector::PHI_TILDE, m));
  const auto gram = gram_matrix(records);
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j)
      if (i != j) {
        EXPECT_TRUE(gram[i][j].is_exactly_zero());
      }
}

TEST(Ladder, GramRejectsMixedFamilies) {
  EXPECT_THROW(gram_matrix({eigenstate(make_xn_system(1), Sector::PSI, 0), eigenstate(make_xn_system(2), Sector::PSI, 0)}),
               FamilyMismatch);
}

TEST(Ladder, LoweringCoefficientsExact) {
  for (int n = 1; n <= 3; ++n) {
    const auto report = verify_lemma1(make_xn_system(n), 6);
    EXPECT_TRUE(report.pass) << "n=" << n;
    for (const auto& c : report.checks) {
      EXPECT_EQ(c.computed_sq, c.expected_sq) << "relation " << static_cast<int>(c.relation) << " m=" << c.m;
      EXPECT_TRUE(c.proportional);
    }
  }
}

TEST(Ladder, LoweringClosedForms) {
  // gamma = -1, delta = 2n-1: lambda^2 = 2nm, 2nm + 2n - 1, 2nm - 2n + 1, 2nm.
  for (int n = 1; n <= 3; ++n) {
    const auto sys = make_xn_system(n);
    for (int m = 1; m <= 6; ++m) {
      EXPECT_EQ(expected_lowering_sq(sys, LoweringRelation::A_ON_PSI, m), Rational(2 * n * m));
      EXPECT_EQ(expected_lowering_sq(sys, LoweringRelation::A_ON_PHI, m), Rational(2 * n * m + 2 * n - 1));
      EXPECT_EQ(expected_lowering_sq(sys, LoweringRelation::BDAG_ON_PSI_TILDE, m), Rational(2 * n * m - 2 * n + 1));
      EXPECT_EQ(expected_lowering_sq(sys, LoweringRelation::BDAG_ON_PHI_TILDE, m), Rational(2 * n * m));
    }
  }
}

TEST(Ladder, MemoMatchesFreshConstruction) {
  const auto sys = make_xn_system(2);
  LadderTowers towers(sys);
  for (Sector s : {Sector::PHI_TILDE, Sector::PSI, Sector::PSI_TILDE, Sector::PHI})
    for (int m = first_level(s); m <= 5; ++m) {
      const auto a = towers.get(s, m);
      const auto b = eigenstate(sys, s, m);
      EXPECT_EQ(a.state, b.state);
      EXPECT_EQ(a.norm_sq, b.norm_sq);
    }
}

TEST(Ladder, SamplesAreNormalized) {
  const auto rec = eigenstate(make_xn_system(2), Sector::PHI, 2);
  // Trapezoid on a wide grid; the state decays like e^{-x^4/4}.
  std::vector<double> xs;
  for (int i = 0; i <= 4000; ++i) xs.push_back(-5.0 + 10.0 * i / 4000);
  const auto v = sample_normalized(rec, xs);
  double sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += v[i] * v[i] * ((i == 0 || i + 1 == v.size()) ? 0.5 : 1.0);
  EXPECT_NEAR(sum * 10.0 / 4000, 1.0, 1e-9);
}

}  // namespace
}  // namespace csusy
