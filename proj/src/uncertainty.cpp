#include "csusy/uncertainty.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "csusy/errors.hpp"
#include "csusy/gamma_vector.hpp"

namespace csusy {
namespace {

using G = Generator;
using cplx = std::complex<double>;

cplx i_pow(int p) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((p % 4) + 4) % 4];
}

double sqrt2_factor(int w) { return std::pow(2.0, -0.5 * w); }

// <f, op g> with the phase of op included.
cplx matrix_element(const CoupledSusySystem& sys, const OperatorExpr& op, const GaussPolyState& f,
                    const GaussPolyState& g) {
  if (op.is_zero() || f.is_zero() || g.is_zero()) return 0.0;
  const auto v = inner_product(f, op.apply(sys, g));
  return i_pow(op.i_power()) * to_double(v);
}

double variance(const Expectation& mean, const Expectation& square) {
  return square.value.real() - std::norm(mean.value);
}

std::optional<Rational> exact_variance(const Expectation& mean, const Expectation& square) {
  if (!mean.exact || !square.exact) return std::nullopt;
  return Rational(*square.exact - *mean.exact * *mean.exact);
}

UncertaintyResult pair_product(const CoupledSusySystem& sys, const GaussPolyState& state, bool tilde,
                               std::string descriptor, double tol) {
  if (sys.broken) throw DomainError("uncertainty products need an unbroken system");
  require_sector(state, tilde);
  const auto o1 = observable_expr(tilde ? Observable::L_TILDE : Observable::L);
  const auto o2 = observable_expr(tilde ? Observable::A_TILDE : Observable::A);

  const auto m1 = expectation(sys, o1, state), s1 = expectation(sys, o1 * o1, state);
  const auto m2 = expectation(sys, o2, state), s2 = expectation(sys, o2 * o2, state);

  UncertaintyResult r;
  r.pair = tilde ? "L_TILDE,A_TILDE" : "L,A";
  r.state_descriptor = std::move(descriptor);
  r.variance1 = exact_variance(m1, s1);
  r.variance2 = exact_variance(m2, s2);
  const double v1 = r.variance1 ? to_double(*r.variance1) : variance(m1, s1);
  const double v2 = r.variance2 ? to_double(*r.variance2) : variance(m2, s2);
  r.sigma1 = std::sqrt(std::max(0.0, v1));
  r.sigma2 = std::sqrt(std::max(0.0, v2));
  r.product = r.sigma1 * r.sigma2;

  r.robertson_bound = 0.5 * std::abs(expectation(sys, commutator(o1, o2), state).value);
  const Word number = tilde ? Word{G::A, G::ADAG} : Word{G::ADAG, G::A};
  const double occupation = expectation(sys, OperatorExpr::of(number), state).value.real();
  const double shift = to_double(tilde ? sys.delta : sys.gamma);
  r.robertson_closed_form = to_double(sys.gap()) / 4 * std::abs(2 * occupation - shift);
  r.lower_bound = sys.gap() * (tilde ? sys.delta : Rational(-sys.gamma)) / 4;
  r.equality_gap = r.product - to_double(r.lower_bound);
  r.pass = r.product >= r.robertson_bound - tol * std::max(1.0, r.robertson_bound);
  return r;
}

}  // namespace

std::string_view name(Observable o) {
  switch (o) {
    case Observable::L: return "L";
    case Observable::A: return "A";
    case Observable::L_TILDE: return "L_TILDE";
    case Observable::A_TILDE: return "A_TILDE";
  }
  return "?";
}

Observable parse_observable(std::string_view text) {
  if (text == "L") return Observable::L;
  if (text == "A") return Observable::A;
  if (text == "L_TILDE") return Observable::L_TILDE;
  if (text == "A_TILDE") return Observable::A_TILDE;
  throw std::invalid_argument("unknown observable '" + std::string(text) + "'");
}

bool is_tilde(Observable o) { return o == Observable::L_TILDE || o == Observable::A_TILDE; }

OperatorExpr observable_expr(Observable o) {
  const Rational half(1, 2);
  const bool tilde = is_tilde(o);
  const auto raise = OperatorExpr::of(tilde ? Word{G::B, G::ADAG} : Word{G::ADAG, G::B});
  const auto lower = OperatorExpr::of(tilde ? Word{G::A, G::BDAG} : Word{G::BDAG, G::A});
  if (o == Observable::L || o == Observable::L_TILDE) return (raise + lower) * Rational(-half);
  return ((raise - lower) * half).times_i();
}

void require_sector(const GaussPolyState& state, bool tilde) {
  const int n = state.n();
  const std::set<int> allowed = tilde ? std::set<int>{n % (2 * n), n - 1} : std::set<int>{0, 2 * n - 1};
  for (int r : state.residues())
    if (!allowed.count(r))
      throw DomainError(std::string("state has exponents outside the ") + (tilde ? "tilde" : "untilded") +
                        " sector (residue " + std::to_string(r) + " mod " + std::to_string(2 * n) + ")");
}

Expectation expectation(const CoupledSusySystem& sys, const OperatorExpr& op, const GaussPolyState& state) {
  if (state.is_zero()) throw DomainError("expectation in the zero state");
  const auto norm = inner_product(state, state);
  Expectation e;
  if (op.is_zero()) {
    e.value = 0.0;
    e.exact = Rational(0);
    return e;
  }
  const auto numerator = inner_product(state, op.apply(sys, state));
  if (numerator.is_exactly_zero()) {
    e.value = 0.0;
    e.exact = Rational(0);
    return e;
  }
  const cplx phase = i_pow(op.i_power());
  if (const auto ratio = exact_ratio(numerator, norm)) {
    e.value = phase * (to_double(ratio->ratio) * sqrt2_factor(ratio->sqrt2_power));
    const int p = ((op.i_power() % 4) + 4) % 4;
    if (ratio->sqrt2_power == 0 && (p == 0 || p == 2)) e.exact = p == 0 ? ratio->ratio : Rational(-ratio->ratio);
    return e;
  }
  e.value = phase * (to_double(numerator) / to_double(norm));
  return e;
}

UncertaintyResult uncertainty_product_LA(const CoupledSusySystem& sys, const GaussPolyState& state,
                                         std::string descriptor, double tol) {
  return pair_product(sys, state, false, std::move(descriptor), tol);
}

UncertaintyResult uncertainty_product_tilde(const CoupledSusySystem& sys, const GaussPolyState& state,
                                            std::string descriptor, double tol) {
  return pair_product(sys, state, true, std::move(descriptor), tol);
}

DirectSumState make_direct_sum(GaussPolyState psi1, double amp1, GaussPolyState psi2, double amp2,
                               std::string descriptor) {
  if (psi1.n() != psi2.n()) throw FamilyMismatch("direct sum of states from different families");
  if (std::abs(amp1 * amp1 + amp2 * amp2 - 1.0) > 1e-12)
    throw DomainError("direct-sum amplitudes must satisfy amp1^2 + amp2^2 = 1");
  if ((psi1.is_zero() && amp1 != 0.0) || (psi2.is_zero() && amp2 != 0.0))
    throw DomainError("a zero component must carry amplitude 0");
  if (!psi1.is_zero()) require_sector(psi1, false);
  if (!psi2.is_zero()) require_sector(psi2, true);
  return {std::move(psi1), std::move(psi2), amp1, amp2, std::move(descriptor)};
}

BlockOperator position_operator() {
  BlockOperator x;
  x.blocks[0][1] = (OperatorExpr::of(G::ADAG) + OperatorExpr::of(G::BDAG)).times_sqrt2_power(1);
  x.blocks[1][0] = (OperatorExpr::of(G::A) + OperatorExpr::of(G::B)).times_sqrt2_power(1);
  return x;
}

BlockOperator momentum_operator() {
  BlockOperator p;
  p.blocks[0][1] = (OperatorExpr::of(G::ADAG) - OperatorExpr::of(G::BDAG)).times_sqrt2_power(1).times_i(3);
  p.blocks[1][0] = (OperatorExpr::of(G::B) - OperatorExpr::of(G::A)).times_sqrt2_power(1).times_i(3);
  return p;
}

BlockOperator operator*(const BlockOperator& x, const BlockOperator& y) {
  BlockOperator out;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j) out.blocks[i][k] += x.blocks[i][j] * y.blocks[j][k];
  return out;
}

BlockOperator operator-(const BlockOperator& x, const BlockOperator& y) {
  BlockOperator out = x;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.blocks[i][j] -= y.blocks[i][j];
  return out;
}

BlockOperator commutator(const BlockOperator& x, const BlockOperator& y) { return x * y - y * x; }

std::complex<double> expectation(const CoupledSusySystem& sys, const BlockOperator& op, const DirectSumState& state) {
  const std::array<const GaussPolyState*, 2> psi{&state.psi1, &state.psi2};
  const std::array<double, 2> amp{state.amp1, state.amp2};
  std::array<double, 2> norm{0.0, 0.0};
  for (int i = 0; i < 2; ++i)
    if (!psi[i]->is_zero()) norm[i] = std::sqrt(to_double(inner_product(*psi[i], *psi[i])));
  cplx total = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (amp[i] == 0.0 || amp[j] == 0.0) continue;
      total += amp[i] * amp[j] / (norm[i] * norm[j]) * matrix_element(sys, op.blocks[i][j], *psi[i], *psi[j]);
    }
  return total;
}

XpResult uncertainty_product_XP(const CoupledSusySystem& sys, const DirectSumState& state, double tol) {
  if (sys.broken) throw DomainError("uncertainty products need an unbroken system");
  if (std::abs(state.amp1 * state.amp1 + state.amp2 * state.amp2 - 1.0) > 1e-12)
    throw DomainError("direct-sum state is not normalized");
  const auto X = position_operator(), P = momentum_operator();
  XpResult r;
  r.state_descriptor = state.descriptor;
  r.mean_x = expectation(sys, X, state);
  r.mean_p = expectation(sys, P, state);
  r.mean_x2 = expectation(sys, X * X, state);
  r.mean_p2 = expectation(sys, P * P, state);
  r.sigma_x = std::sqrt(std::max(0.0, r.mean_x2.real() - std::norm(r.mean_x)));
  r.sigma_p = std::sqrt(std::max(0.0, r.mean_p2.real() - std::norm(r.mean_p)));
  r.product = r.sigma_x * r.sigma_p;
  r.robertson_bound = 0.5 * std::abs(expectation(sys, commutator(X, P), state));
  r.convex_bound = 0.5 * (to_double(Rational(-sys.gamma)) * state.amp1 * state.amp1 +
                          to_double(sys.delta) * state.amp2 * state.amp2);
  r.global_bound = Rational(-sys.gamma < sys.delta ? Rational(-sys.gamma) : sys.delta) / 2;
  r.pass = r.product >= r.robertson_bound - tol * std::max(1.0, r.robertson_bound);
  return r;
}

VerificationReport verify_observable_commutators(const CoupledSusySystem& sys, ExponentRange range) {
  const Rational gap = sys.gap();
  const Rational half(1, 2);
  std::vector<IdentityCheck> checks;

  const auto la = commutator(observable_expr(Observable::L), observable_expr(Observable::A));
  const auto la_rhs = ((OperatorExpr::of(Word{G::ADAG, G::A}) - OperatorExpr::identity(sys.gamma * half)) *
                       Rational(-gap)).times_i();
  checks.push_back(check_identity(sys, "[L,A] = -i(delta-gamma)(a†a - gamma/2)", la, la_rhs, range));

  const auto tilde = commutator(observable_expr(Observable::L_TILDE), observable_expr(Observable::A_TILDE));
  const auto tilde_rhs = ((OperatorExpr::of(Word{G::A, G::ADAG}) - OperatorExpr::identity(sys.delta * half)) *
                          Rational(-gap)).times_i();
  checks.push_back(check_identity(sys, "[L~,A~] = -i(delta-gamma)(aa† - delta/2)", tilde, tilde_rhs, range));

  const auto xp = commutator(position_operator(), momentum_operator());
  checks.push_back(check_identity(sys, "[X,P]_11 = i gamma", xp.blocks[0][0],
                                  OperatorExpr::identity(sys.gamma).times_i(), range));
  checks.push_back(check_identity(sys, "[X,P]_22 = -i delta", xp.blocks[1][1],
                                  OperatorExpr::identity(Rational(-sys.delta)).times_i(), range));
  checks.push_back(check_identity(sys, "[X,P]_12 = 0", xp.blocks[0][1], OperatorExpr(), range));
  checks.push_back(check_identity(sys, "[X,P]_21 = 0", xp.blocks[1][0], OperatorExpr(), range));
  return make_report("observable commutators", sys.n, range, std::move(checks));
}

}  // namespace csusy
