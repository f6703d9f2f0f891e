#include "csusy/verification.hpp"

#include <algorithm>
#include <stdexcept>

namespace csusy {
namespace {

using G = Generator;

OperatorExpr op(std::initializer_list<G> word, const Rational& c = 1) { return OperatorExpr::of(Word(word), c); }

}  // namespace

ExponentRange default_window(int n) { return {-2 * n - 10, 4 * n + 30}; }

std::optional<VerificationFailure> VerificationReport::first_failure() const {
  for (const auto& check : checks)
    for (const auto& [k, residual] : check.residuals)
      if (!residual.is_zero()) return VerificationFailure{check.identity, k, residual};
  return std::nullopt;
}

IdentityCheck check_identity(const CoupledSusySystem& sys, std::string identity, const OperatorExpr& lhs,
                             const OperatorExpr& rhs, ExponentRange range) {
  if (range.size() < 1) throw std::invalid_argument("empty exponent range");
  if (!lhs.is_zero() && !rhs.is_zero() && (lhs.i_power() - rhs.i_power()) % 2 != 0)
    throw std::invalid_argument("identity sides carry different complex phases");
  IdentityCheck check;
  check.identity = std::move(identity);
  check.max_word_length = std::max(lhs.max_word_length(), rhs.max_word_length());
  const OperatorExpr diff = lhs - rhs;
  for (int k = range.lo; k <= range.hi; ++k) {
    GaussPolyState residual = diff.apply(sys, GaussPolyState::monomial(sys.n, k));
    if (!residual.is_zero()) check.pass = false;
    check.residuals.emplace_back(k, std::move(residual));
  }
  return check;
}

VerificationReport make_report(std::string name, int n, ExponentRange range, std::vector<IdentityCheck> checks) {
  VerificationReport report;
  report.name = std::move(name);
  report.n = n;
  report.range = range;
  std::size_t degree = 0;
  for (const auto& c : checks) {
    report.pass = report.pass && c.pass;
    degree = std::max(degree, c.max_word_length);
  }
  report.certified_for_all_k = report.pass && static_cast<std::size_t>(range.size()) > degree + 1;
  report.checks = std::move(checks);
  return report;
}

VerificationReport verify_coupled_susy(const CoupledSusySystem& sys, ExponentRange range) {
  std::vector<IdentityCheck> checks;
  checks.push_back(check_identity(sys, "ADAG*A - BDAG*B = gamma", op({G::ADAG, G::A}) - op({G::BDAG, G::B}),
                                  OperatorExpr::identity(sys.gamma), range));
  checks.push_back(check_identity(sys, "A*ADAG - B*BDAG = delta", op({G::A, G::ADAG}) - op({G::B, G::BDAG}),
                                  OperatorExpr::identity(sys.delta), range));
  return make_report("coupled_susy", sys.n, range, std::move(checks));
}

KOperators make_k_operators(const CoupledSusySystem& sys, bool tilde, bool scaled) {
  const Rational inv_gap = 1 / sys.gap();
  const Rational ladder_scale = scaled ? inv_gap : Rational(1);
  KOperators k;
  if (!tilde) {
    k.k0 = (op({G::ADAG, G::A}) - OperatorExpr::identity(sys.gamma / 2)) * inv_gap;
    k.kplus = op({G::ADAG, G::B}, ladder_scale);
    k.kminus = op({G::BDAG, G::A}, ladder_scale);
  } else {
    k.k0 = (op({G::A, G::ADAG}) - OperatorExpr::identity(sys.delta / 2)) * inv_gap;
    k.kplus = op({G::B, G::ADAG}, ladder_scale);
    k.kminus = op({G::A, G::BDAG}, ladder_scale);
  }
  return k;
}

VerificationReport verify_k_relations(const CoupledSusySystem& sys, const KOperators& k, ExponentRange range,
                                      std::string name) {
  std::vector<IdentityCheck> checks;
  checks.push_back(check_identity(sys, "[K0, K+] = K+", commutator(k.k0, k.kplus), k.kplus, range));
  checks.push_back(check_identity(sys, "[K0, K-] = -K-", commutator(k.k0, k.kminus), k.kminus * Rational(-1), range));
  checks.push_back(check_identity(sys, "[K+, K-] = -2 K0", commutator(k.kplus, k.kminus), k.k0 * Rational(-2), range));
  return make_report(std::move(name), sys.n, range, std::move(checks));
}

VerificationReport verify_su11(const CoupledSusySystem& sys, ExponentRange range) {
  const Rational gap = sys.gap();
  const auto adag_a = op({G::ADAG, G::A});
  const auto a_adag = op({G::A, G::ADAG});
  const auto raise = op({G::ADAG, G::B});
  const auto lower = op({G::BDAG, G::A});
  const auto raise_t = op({G::B, G::ADAG});
  const auto lower_t = op({G::A, G::BDAG});

  std::vector<IdentityCheck> checks;
  checks.push_back(check_identity(sys, "[ADAG*A, ADAG*B] = (delta-gamma) ADAG*B", commutator(adag_a, raise),
                                  raise * gap, range));
  checks.push_back(check_identity(sys, "[ADAG*A, BDAG*A] = -(delta-gamma) BDAG*A", commutator(adag_a, lower),
                                  lower * Rational(-gap), range));
  checks.push_back(check_identity(sys, "[ADAG*B, BDAG*A] = 2(gamma-delta)(ADAG*A - gamma/2)",
                                  commutator(raise, lower),
                                  (adag_a - OperatorExpr::identity(sys.gamma / 2)) * Rational(-2 * gap), range));
  checks.push_back(check_identity(sys, "[A*ADAG, B*ADAG] = (delta-gamma) B*ADAG", commutator(a_adag, raise_t),
                                  raise_t * gap, range));
  checks.push_back(check_identity(sys, "[A*ADAG, A*BDAG] = -(delta-gamma) A*BDAG", commutator(a_adag, lower_t),
                                  lower_t * Rational(-gap), range));
  checks.push_back(check_identity(sys, "[B*ADAG, A*BDAG] = 2(gamma-delta)(A*ADAG - delta/2)",
                                  commutator(raise_t, lower_t),
                                  (a_adag - OperatorExpr::identity(sys.delta / 2)) * Rational(-2 * gap), range));

  for (bool tilde : {false, true}) {
    auto k_report = verify_k_relations(sys, make_k_operators(sys, tilde), range, "");
    for (auto& c : k_report.checks) {
      c.identity = (tilde ? "tilde " : "") + c.identity;
      checks.push_back(std::move(c));
    }
  }
  return make_report("su11", sys.n, range, std::move(checks));
}

}  // namespace csusy
