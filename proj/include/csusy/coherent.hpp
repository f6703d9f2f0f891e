#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "csusy/ladder.hpp"
#include "csusy/rational.hpp"
#include "csusy/system.hpp"

namespace csusy {

using Complex = std::complex<double>;

/// Bargmann index k of each tower, in the order PSI, PHI, PSI_TILDE, PHI_TILDE:
///   -gamma/(2(delta-gamma)),  delta/(2(delta-gamma)) + 1/2,
///   -gamma/(2(delta-gamma)) + 1/2,  delta/(2(delta-gamma)).
/// Throws DomainError for broken systems.
std::array<Rational, 4> bargmann_indices(const CoupledSusySystem& sys);
Rational bargmann_index(const CoupledSusySystem& sys, Sector sector);

/// Displacement coherent state D(z)|k, 0> expanded over one tower.
/// coefficients[j] multiplies the normalized tower state at level
/// first_level + j. For PSI_TILDE the tower starts at level 1, so the
/// standard coefficients are shifted by one level.
struct CoherentState {
  Sector sector = Sector::PSI;
  Rational k;
  Complex z;
  /// Index of the last kept coefficient.
  int M = 0;
  int first_level = 0;
  std::vector<Complex> coefficients;
  /// Upper bound on the discarded mass sum_{j > M} |c_j|^2.
  double tail_bound = 0.0;

  double norm_sq() const;
};

/// c_0 = (1-|z|^2)^k and c_(j+1) = c_j z sqrt((j + 2k)/(j + 1)), for j <= M.
std::vector<Complex> coherent_coefficients(const Rational& k, Complex z, int M);

/// (1-|z|^2)^k sqrt(Gamma(j+2k) / (j! Gamma(2k))) z^j with MPFR Gamma values.
Complex direct_coefficient(const Rational& k, Complex z, int j);

/// Geometric majorant of sum_{j > M} |c_j|^2 given |c_(M+1)|^2: the ratio
/// |c_(j+1)/c_j|^2 = |z|^2 (j+2k)/(j+1) is bounded for j >= M+1 by
/// q = |z|^2 max(1, (M+1+2k)/(M+2)), so the tail is at most |c_(M+1)|^2/(1-q).
double coherent_tail_bound(const Rational& k, Complex z, int M, Complex next_coefficient);

/// Truncates at the first M whose tail bound is below tol. Throws DomainError
/// for |z| >= 1, tol <= 0, or a broken system.
CoherentState coherent_state(const CoupledSusySystem& sys, Sector sector, Complex z, double tol);

/// The scalar s with op |z; k> = s |z; k + 1/2> for the two half-lowering
/// relations: a on PSI gives sqrt(-gamma) z / sqrt(1-|z|^2) with partner
/// PSI_TILDE; b† on PHI_TILDE gives sqrt(delta) z / sqrt(1-|z|^2) with
/// partner PHI.
Complex half_lowering_scalar(const CoupledSusySystem& sys, Sector sector, Complex z);
Sector half_lowering_partner(Sector sector);

struct HalfLoweringCheck {
  Sector source = Sector::PSI;
  Generator op = Generator::A;
  Rational source_k;
  Sector target = Sector::PSI_TILDE;
  Rational target_k;
  Complex z;
  Complex scalar;
  int M = 0;
  /// Euclidean norm of (op|z;k> - scalar |z;k'>) on the tower levels kept
  /// in the truncated source, with the partner evaluated on the same levels.
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Applies a (sector PSI) or b† (sector PHI_TILDE) coefficientwise with the
/// exact lowering factors of the towers and compares against the partner
/// state. `scalar` overrides the expected scalar. Residual must be < tol.
HalfLoweringCheck verify_half_lowering(const CoupledSusySystem& sys, Sector sector, Complex z, double tol,
                                       std::optional<Complex> scalar = std::nullopt);

struct FullLoweringCheck {
  Complex z;
  Complex best_scalar;
  /// ||b†a|z> - s|z>|| / ||b†a|z>|| for the least-squares s.
  double normalized_residual = 0.0;
  bool not_eigenstate = false;
};

/// b†a on a PSI coherent state, which is not an eigenvector of b†a.
/// not_eigenstate is set iff the normalized residual exceeds threshold.
FullLoweringCheck check_full_lowering(const CoupledSusySystem& sys, Complex z, double tol, double threshold = 0.01);

}  // namespace csusy
