#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "csusy/gauss_poly_state.hpp"
#include "csusy/operator_expr.hpp"
#include "csusy/rational.hpp"
#include "csusy/system.hpp"
#include "csusy/verification.hpp"

namespace csusy {

/// Second-order observables:
///   L  = -1/2 (a†b + b†a),   A  = i/2 (a†b - b†a)    on the untilded sector
///   L~ = -1/2 (ba† + ab†),   A~ = i/2 (ba† - ab†)    on the tilde sector
enum class Observable { L, A, L_TILDE, A_TILDE };

std::string_view name(Observable o);
Observable parse_observable(std::string_view text);
OperatorExpr observable_expr(Observable o);
bool is_tilde(Observable o);

/// Exponent residues mod 2n a state must live in for an observable of the
/// given sector: {0, 2n-1} untilded, {n, n-1} tilde. Throws DomainError
/// otherwise, before any inner product is formed.
void require_sector(const GaussPolyState& state, bool tilde);

struct Expectation {
  std::complex<double> value;
  /// Set when the ratio is an exact rational real number.
  std::optional<Rational> exact;
};

/// <f|op|f> / <f|f>, formed exactly and then evaluated. No terms are skipped
/// on symmetry grounds.
Expectation expectation(const CoupledSusySystem& sys, const OperatorExpr& op, const GaussPolyState& state);

struct UncertaintyResult {
  std::string pair;
  std::string state_descriptor;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double product = 0.0;
  /// Exact variances when both are rational.
  std::optional<Rational> variance1;
  std::optional<Rational> variance2;
  /// 1/2 |<[O1, O2]>| evaluated from the commutator word.
  double robertson_bound = 0.0;
  /// The same bound from its closed form in <a†a> (resp. <aa†>).
  double robertson_closed_form = 0.0;
  /// State-independent lower bound: (delta-gamma)|gamma|/4 or (delta-gamma)delta/4.
  Rational lower_bound;
  double equality_gap = 0.0;
  bool pass = false;
};

/// sigma_L sigma_A on an untilded-sector state (need not be normalized).
/// pass iff product >= robertson_bound - tol * max(1, bound).
UncertaintyResult uncertainty_product_LA(const CoupledSusySystem& sys, const GaussPolyState& state,
                                         std::string descriptor = "", double tol = 1e-12);

/// sigma_L~ sigma_A~ on a tilde-sector state.
UncertaintyResult uncertainty_product_tilde(const CoupledSusySystem& sys, const GaussPolyState& state,
                                            std::string descriptor = "", double tol = 1e-12);

/// (psi1, psi2) on the direct sum of the two sectors, stored as exact
/// unnormalized components with real amplitudes: the physical state is
/// (amp1 psi1/||psi1||, amp2 psi2/||psi2||).
struct DirectSumState {
  GaussPolyState psi1;
  GaussPolyState psi2;
  double amp1 = 1.0;
  double amp2 = 0.0;
  std::string descriptor;
};

/// Validates sectors and amp1^2 + amp2^2 = 1 (within 1e-12); a zero component
/// must carry amplitude 0. Throws DomainError otherwise.
DirectSumState make_direct_sum(GaussPolyState psi1, double amp1, GaussPolyState psi2, double amp2,
                               std::string descriptor = "");

/// 2x2 block operator on the direct sum; blocks[i][j] maps sector j to i.
struct BlockOperator {
  std::array<std::array<OperatorExpr, 2>, 2> blocks;
};

/// X = 1/sqrt2 [[0, a†+b†], [a+b, 0]],  P = -i/sqrt2 [[0, a†-b†], [-a+b, 0]].
BlockOperator position_operator();
BlockOperator momentum_operator();
BlockOperator operator*(const BlockOperator& x, const BlockOperator& y);
BlockOperator operator-(const BlockOperator& x, const BlockOperator& y);
BlockOperator commutator(const BlockOperator& x, const BlockOperator& y);

std::complex<double> expectation(const CoupledSusySystem& sys, const BlockOperator& op, const DirectSumState& state);

struct XpResult {
  std::string state_descriptor;
  std::complex<double> mean_x, mean_p, mean_x2, mean_p2;
  double sigma_x = 0.0;
  double sigma_p = 0.0;
  double product = 0.0;
  /// 1/2 |<[X, P]>| from the block commutator.
  double robertson_bound = 0.0;
  /// 1/2 (|gamma| amp1^2 + delta amp2^2).
  double convex_bound = 0.0;
  /// 1/2 min(|gamma|, delta).
  Rational global_bound;
  bool pass = false;
};

XpResult uncertainty_product_XP(const CoupledSusySystem& sys, const DirectSumState& state, double tol = 1e-12);

/// [L, A] = -i(delta-gamma)(a†a - gamma/2), [L~, A~] = -i(delta-gamma)(aa† - delta/2),
/// and [X, P] = diag(i gamma, -i delta) blockwise, exactly on every monomial
/// of the range.
VerificationReport verify_observable_commutators(const CoupledSusySystem& sys, ExponentRange range);

}  // namespace csusy
