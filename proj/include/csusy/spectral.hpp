#pragma once

#include <string>
#include <vector>

#include "csusy/gamma_vector.hpp"
#include "csusy/gauss_poly_state.hpp"
#include "csusy/real.hpp"
#include "csusy/system.hpp"

namespace csusy {

/// Weak form of a†a on the monomials x^(r + 2nt) e^{-g}, t = 0..T-1.
/// H_ij = <a b_i, a b_j> and S_ij = <b_i, b_j>, both exact.
struct GalerkinProblem {
  int n = 0;
  int residue = 0;
  std::vector<GaussPolyState> basis;
  std::vector<std::vector<GammaVector>> H;
  std::vector<std::vector<GammaVector>> S;
};

struct SpectrumReport {
  std::string method;
  int n = 0;
  /// Ascending.
  std::vector<Real> computed;
  std::vector<Rational> theory;
  /// |computed - theory| / |theory|, or the absolute difference when the
  /// theory value is 0.
  std::vector<double> rel_error;
  unsigned precision_bits = 53;
  /// Ratio of extreme eigenvalues of the Gram matrix (Galerkin only).
  double condition_estimate = 0.0;
  std::vector<std::string> notes;

  double max_rel_error() const;
};

/// Ascending merge of the two a†a ladders m(delta-gamma) and
/// m(delta-gamma)+delta, first `count` values.
std::vector<Rational> theoretical_spectrum(const CoupledSusySystem& sys, int count);

/// Ladder for one residue class: m(delta-gamma) for r = 0, m(delta-gamma)+delta
/// for r = 2n-1.
std::vector<Rational> theoretical_sector_spectrum(const CoupledSusySystem& sys, int residue, int count);

/// residue must be 0 or 2n-1; basis_size >= 1. Throws DomainError otherwise
/// and DivergenceError if an entry diverges (which cannot happen for these
/// residues).
GalerkinProblem build_galerkin(const CoupledSusySystem& sys, int residue, int basis_size);

/// Solves H c = lambda S c at the given mantissa width by Cholesky reduction
/// and a symmetric eigensolve. Throws PrecisionError if S is not numerically
/// positive definite at that width.
SpectrumReport solve_generalized(const CoupledSusySystem& sys, const GalerkinProblem& problem,
                                 unsigned precision_bits);

struct FdOptions {
  /// Exponent p of the potential term (x^p - 1)/2; 0 means the family value 2n.
  int potential_power = 0;
};

/// Conservative three-point discretization of
///   H = 1/2 ( -(x^(2-2n) u')' + (x^(2n) - 1) u )
/// on nodes x_i = -L + (i + 1/2) h, h = 2L/N, with Dirichlet ghost nodes
/// beyond +-L. The coefficient at each cell interface is the harmonic mean
/// h / int x^(2n-2) dx over the cell, which is finite at the cell straddling
/// x = 0 and imposes continuity of u and of the flux x^(2-2n) u' there.
/// Requires N even and N >= 2. Throws PrecisionError when the matrix norm is
/// too large for double precision to resolve O(1) eigenvalues (the interface
/// coefficient at x = 0 grows like h^(1-2n), so in practice n >= 3).
SpectrumReport fd_spectrum(int n, double half_width, int grid_count, int count, FdOptions options = {});

/// Second-order extrapolation of fd_spectrum from grids N and 2N.
SpectrumReport fd_richardson_spectrum(int n, double half_width, int grid_count, int count);

/// Documented agreement tolerance of fd_spectrum for the lowest eigenvalues
/// at the reference grids (n = 1: L = 12, N = 2000; n >= 2: L = 6, N = 4000).
double fd_tolerance(int n);

}  // namespace csusy
