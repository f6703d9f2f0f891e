#include "csusy/spectral.hpp"

#include "eigen_real.hpp"
#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "csusy/errors.hpp"

namespace csusy {
namespace {

using MatrixR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

double scaled_error(double computed, const Rational& theory) {
  const double t = to_double(theory);
  const double diff = std::abs(computed - t);
  return t == 0.0 ? diff : diff / std::abs(t);
}

void fill_errors(SpectrumReport& report) {
  report.rel_error.clear();
  const std::size_t count = std::min(report.computed.size(), report.theory.size());
  for (std::size_t i = 0; i < count; ++i)
    report.rel_error.push_back(scaled_error(static_cast<double>(report.computed[i]), report.theory[i]));
}

}  // namespace

double SpectrumReport::max_rel_error() const {
  double worst = 0.0;
  for (double e : rel_error) worst = std::max(worst, e);
  return worst;
}

std::vector<Rational> theoretical_sector_spectrum(const CoupledSusySystem& sys, int residue, int count) {
  const bool phi = residue == (2 * sys.n - 1) % (2 * sys.n) && residue != 0;
  if (residue != 0 && !phi) throw DomainError("residue must be 0 or 2n-1");
  std::vector<Rational> out;
  for (int m = 0; m < count; ++m) out.push_back(sys.gap() * m + (phi ? sys.delta : Rational(0)));
  return out;
}

std::vector<Rational> theoretical_spectrum(const CoupledSusySystem& sys, int count) {
  std::vector<Rational> out;
  for (int m = 0; static_cast<int>(out.size()) < 2 * count; ++m) {
    out.push_back(sys.gap() * m);
    out.push_back(sys.gap() * m + sys.delta);
  }
  std::sort(out.begin(), out.end());
  out.resize(static_cast<std::size_t>(std::max(count, 0)));
  return out;
}

GalerkinProblem build_galerkin(const CoupledSusySystem& sys, int residue, int basis_size) {
  const int n = sys.n;
  if (basis_size < 1) throw DomainError("Galerkin basis size must be >= 1");
  if (residue != 0 && residue != 2 * n - 1) throw DomainError("Galerkin residue must be 0 or 2n-1");
  GalerkinProblem p;
  p.n = n;
  p.residue = residue;
  std::vector<GaussPolyState> lowered;
  for (int t = 0; t < basis_size; ++t) {
    p.basis.push_back(GaussPolyState::monomial(n, residue + 2 * n * t));
    lowered.push_back(apply_generator(sys, Generator::A, p.basis.back()));
  }
  const auto size = static_cast<std::size_t>(basis_size);
  p.H.assign(size, std::vector<GammaVector>(size, GammaVector(n)));
  p.S = p.H;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) {
      p.H[i][j] = p.H[j][i] = inner_product(lowered[i], lowered[j]);
      p.S[i][j] = p.S[j][i] = inner_product(p.basis[i], p.basis[j]);
    }
  return p;
}

SpectrumReport solve_generalized(const CoupledSusySystem& sys, const GalerkinProblem& problem,
                                 unsigned precision_bits) {
  if (precision_bits < 24) throw std::invalid_argument("precision must be at least 24 bits");
  const auto size = static_cast<Eigen::Index>(problem.basis.size());
  PrecisionScope scope(precision_bits);
  const double target = std::ldexp(1.0, -static_cast<int>(precision_bits));

  MatrixR H(size, size), S(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      H(i, j) = Real(evaluate_gamma_vector(problem.H[ui][uj], target, 4 * precision_bits).value);
      S(i, j) = Real(evaluate_gamma_vector(problem.S[ui][uj], target, 4 * precision_bits).value);
    }

  Eigen::LLT<MatrixR> llt(S);
  Eigen::SelfAdjointEigenSolver<MatrixR> gram(S, Eigen::EigenvaluesOnly);
  const Real smallest = gram.eigenvalues()(0);
  const Real largest = gram.eigenvalues()(size - 1);
  if (llt.info() != Eigen::Success || smallest <= 0)
    throw PrecisionError("Gram matrix is not positive definite at " + std::to_string(precision_bits) +
                         " bits; raise the precision or lower the basis size");

  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixR> solver(H, S, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success)
    throw PrecisionError("generalized eigensolver did not converge at " + std::to_string(precision_bits) + " bits");

  SpectrumReport report;
  report.method = "galerkin";
  report.n = problem.n;
  report.precision_bits = precision_bits;
  report.condition_estimate = static_cast<double>(largest / smallest);
  for (Eigen::Index i = 0; i < size; ++i) report.computed.push_back(solver.eigenvalues()(i));
  std::sort(report.computed.begin(), report.computed.end());
  report.theory = theoretical_sector_spectrum(sys, problem.residue, static_cast<int>(size));
  fill_errors(report);
  report.notes.push_back("basis x^(" + std::to_string(problem.residue) + " + " + std::to_string(2 * problem.n) +
                         "t) e^(-x^" + std::to_string(2 * problem.n) + "/" + std::to_string(2 * problem.n) +
                         "), t < " + std::to_string(size));
  return report;
}

SpectrumReport fd_spectrum(int n, double half_width, int grid_count, int count, FdOptions options) {
  if (n < 1) throw std::invalid_argument("family index n must be >= 1");
  if (grid_count < 2 || grid_count % 2 != 0) throw std::invalid_argument("grid count must be even and >= 2");
  if (half_width <= 0) throw std::invalid_argument("half width must be positive");
  if (count < 1 || count > grid_count) throw std::invalid_argument("eigenvalue count out of range");
  const int p = options.potential_power == 0 ? 2 * n : options.potential_power;

  const double h = 2.0 * half_width / grid_count;
  auto node = [&](int i) { return -half_width + (i + 0.5) * h; };
  // Harmonic mean of w = x^{2-2n} over [x_i, x_{i+1}]:
  // h / int x^{2n-2} dx = h (2n-1) / (x_{i+1}^{2n-1} - x_i^{2n-1}).
  auto conductance = [&](double left, double right) {
    if (n == 1) return 1.0;
    const int q = 2 * n - 1;
    return h * q / (std::pow(right, q) - std::pow(left, q));
  };

  const auto size = static_cast<std::size_t>(grid_count);
  std::vector<double> diag(size), off(size - 1);
  const double inv_h2 = 1.0 / (h * h);
  for (int i = 0; i < grid_count; ++i) {
    const double x = node(i);
    const double c_left = conductance(node(i - 1), x);
    const double c_right = conductance(x, node(i + 1));
    diag[static_cast<std::size_t>(i)] = 0.5 * ((c_left + c_right) * inv_h2 + std::pow(x, p) - 1.0);
    if (i + 1 < grid_count) off[static_cast<std::size_t>(i)] = -0.5 * c_right * inv_h2;
  }

  double norm = 0.0;
  for (std::size_t i = 0; i < size; ++i)
    norm = std::max(norm, std::abs(diag[i]) + (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < size ? std::abs(off[i]) : 0.0));
  if (norm * std::numeric_limits<double>::epsilon() > 1e-3)
    throw PrecisionError("finite-difference matrix norm " + std::to_string(norm) +
                         " swamps the low spectrum in double precision; use the Galerkin solver");

  lapack_int found = 0, nsplit = 0;
  std::vector<double> w(size);
  std::vector<lapack_int> iblock(size), isplit(size);
  const lapack_int info =
      LAPACKE_dstebz('I', 'E', static_cast<lapack_int>(size), 0.0, 0.0, 1, count, 0.0, diag.data(), off.data(),
                     &found, &nsplit, w.data(), iblock.data(), isplit.data());
  if (info != 0) throw std::runtime_error("tridiagonal eigensolver failed (info " + std::to_string(info) + ")");

  SpectrumReport report;
  report.method = "finite_difference";
  report.n = n;
  report.precision_bits = 53;
  for (lapack_int i = 0; i < found; ++i) report.computed.push_back(Real(w[static_cast<std::size_t>(i)]));
  report.theory = theoretical_spectrum(make_xn_system(n), count);
  fill_errors(report);
  report.notes.push_back("grid L = " + std::to_string(half_width) + ", N = " + std::to_string(grid_count) +
                         ", Dirichlet at +-L");
  if (n >= 2)
    report.notes.push_back(
        "x = 0 is a regular singular point; the harmonic-mean interface selects continuity of u and of "
        "x^(2-2n) u' across it, one of several self-adjoint choices");
  if (p != 2 * n) report.notes.push_back("potential exponent overridden to " + std::to_string(p));
  return report;
}

SpectrumReport fd_richardson_spectrum(int n, double half_width, int grid_count, int count) {
  const auto coarse = fd_spectrum(n, half_width, grid_count, count);
  auto fine = fd_spectrum(n, half_width, 2 * grid_count, count);
  const std::size_t size = std::min(coarse.computed.size(), fine.computed.size());
  fine.computed.resize(size);
  for (std::size_t i = 0; i < size; ++i) fine.computed[i] = (4 * fine.computed[i] - coarse.computed[i]) / 3;
  fine.method = "finite_difference_richardson";
  fill_errors(fine);
  fine.notes.push_back("Richardson extrapolation (4 E(h/2) - E(h)) / 3 from N = " + std::to_string(grid_count) +
                       " and " + std::to_string(2 * grid_count));
  return fine;
}

double fd_tolerance(int n) { return n == 1 ? 1e-5 : 0.05; }

}  // namespace csusy
