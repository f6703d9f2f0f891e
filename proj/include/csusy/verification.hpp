#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csusy/gauss_poly_state.hpp"
#include "csusy/operator_expr.hpp"
#include "csusy/system.hpp"

namespace csusy {

struct ExponentRange {
  int lo = 0;
  int hi = 0;  // inclusive
  int size() const { return hi - lo + 1; }
};

/// [-2n-10, 4n+30].
ExponentRange default_window(int n);

/// One operator identity lhs == rhs checked on every monomial x^k in a range.
struct IdentityCheck {
  std::string identity;
  /// Residual (lhs - rhs) x^k e^{-g} for each tested k, in order.
  std::vector<std::pair<int, GaussPolyState>> residuals;
  std::size_t max_word_length = 0;
  bool pass = true;
};

struct VerificationFailure {
  std::string identity;
  int k = 0;
  GaussPolyState residual;
};

/// Pass iff every residual of every check is the exact zero state.
///
/// Each word acts on x^k with coefficients polynomial in k of degree at most
/// its length, so a residual that vanishes on more than max_word_length + 1
/// consecutive exponents vanishes for every k; `certified_for_all_k`
/// records whether the window was wide enough for that argument.
struct VerificationReport {
  std::string name;
  int n = 0;
  ExponentRange range;
  std::vector<IdentityCheck> checks;
  bool pass = true;
  bool certified_for_all_k = false;

  std::optional<VerificationFailure> first_failure() const;
};

/// Checks lhs x^k == rhs x^k exactly for every k in range. Both sides must
/// be real or both imaginary.
IdentityCheck check_identity(const CoupledSusySystem& sys, std::string identity, const OperatorExpr& lhs,
                             const OperatorExpr& rhs, ExponentRange range);

VerificationReport make_report(std::string name, int n, ExponentRange range, std::vector<IdentityCheck> checks);

/// a†a - b†b = gamma and aa† - bb† = delta on every monomial in range.
VerificationReport verify_coupled_susy(const CoupledSusySystem& sys, ExponentRange range);

/// su(1,1) generators for one sector:
///   untilded: K+ = a†b/(delta-gamma), K- = b†a/(delta-gamma), K0 = (a†a - gamma/2)/(delta-gamma)
///   tilde:    K+ = ba†/(delta-gamma), K- = ab†/(delta-gamma), K0 = (aa† - delta/2)/(delta-gamma)
struct KOperators {
  OperatorExpr k0;
  OperatorExpr kplus;
  OperatorExpr kminus;
};

/// With scaled = false the K+- are left without the 1/(delta-gamma) factor,
/// which is a mutation the su(1,1) check must reject.
KOperators make_k_operators(const CoupledSusySystem& sys, bool tilde, bool scaled = true);

/// [K0, K+] = K+, [K0, K-] = -K-, [K+, K-] = -2 K0.
VerificationReport verify_k_relations(const CoupledSusySystem& sys, const KOperators& k, ExponentRange range,
                                      std::string name);

/// Ladder commutators of both sectors and the scaled su(1,1) relations:
///   [a†a, a†b] = (delta-gamma) a†b,   [a†a, b†a] = -(delta-gamma) b†a,
///   [a†b, b†a] = 2(gamma-delta)(a†a - gamma/2),
///   [aa†, ba†] = (delta-gamma) ba†,   [aa†, ab†] = -(delta-gamma) ab†,
///   [ba†, ab†] = 2(gamma-delta)(aa† - delta/2).
VerificationReport verify_su11(const CoupledSusySystem& sys, ExponentRange range);

}  // namespace csusy
