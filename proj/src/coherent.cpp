#include "csusy/coherent.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "csusy/errors.hpp"
#include "csusy/real.hpp"

namespace csusy {
namespace {

void check_disk(Complex z) {
  if (!(std::norm(z) < 1.0)) throw DomainError("coherent states need |z| < 1");
}

double lowering_factor(const CoupledSusySystem& sys, LoweringRelation relation, int m) {
  return std::sqrt(to_double(expected_lowering_sq(sys, relation, m)));
}

CoherentState build(Sector sector, const Rational& k, Complex z, int M) {
  CoherentState s;
  s.sector = sector;
  s.k = k;
  s.z = z;
  s.M = M;
  s.first_level = first_level(sector);
  auto c = coherent_coefficients(k, z, M + 1);
  s.tail_bound = coherent_tail_bound(k, z, M, c.back());
  c.pop_back();
  s.coefficients = std::move(c);
  return s;
}

}  // namespace

double CoherentState::norm_sq() const {
  double sum = 0.0;
  for (const auto& c : coefficients) sum += std::norm(c);
  return sum;
}

std::array<Rational, 4> bargmann_indices(const CoupledSusySystem& sys) {
  if (sys.broken) throw DomainError("Bargmann indices need an unbroken system");
  const Rational two_gap = 2 * sys.gap();
  const Rational half(1, 2);
  const Rational psi = -sys.gamma / two_gap;
  const Rational phi_tilde = sys.delta / two_gap;
  return {psi, Rational(phi_tilde + half), Rational(psi + half), phi_tilde};
}

Rational bargmann_index(const CoupledSusySystem& sys, Sector sector) {
  return bargmann_indices(sys)[static_cast<std::size_t>(sector)];
}

std::vector<Complex> coherent_coefficients(const Rational& k, Complex z, int M) {
  check_disk(z);
  if (M < 0) throw std::invalid_argument("truncation index must be nonnegative");
  const double two_k = 2 * to_double(k);
  std::vector<Complex> c;
  c.reserve(static_cast<std::size_t>(M) + 1);
  c.emplace_back(std::pow(1.0 - std::norm(z), to_double(k)), 0.0);
  for (int j = 0; j < M; ++j) c.push_back(c.back() * z * std::sqrt((j + two_k) / (j + 1)));
  return c;
}

Complex direct_coefficient(const Rational& k, Complex z, int j) {
  check_disk(z);
  if (j < 0) throw std::invalid_argument("coefficient index must be nonnegative");
  PrecisionScope scope(128);
  const Real two_k = to_real(Rational(2 * k));
  const Real ratio = boost::multiprecision::tgamma(two_k + j) /
                     (boost::multiprecision::tgamma(Real(j + 1)) * boost::multiprecision::tgamma(two_k));
  const double modulus = std::pow(1.0 - std::norm(z), to_double(k)) * static_cast<double>(sqrt(ratio));
  return modulus * std::pow(z, j);
}

double coherent_tail_bound(const Rational& k, Complex z, int M, Complex next_coefficient) {
  const double two_k = 2 * to_double(k);
  const double q = std::norm(z) * std::max(1.0, (M + 1 + two_k) / (M + 2));
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return std::norm(next_coefficient) / (1.0 - q);
}

CoherentState coherent_state(const CoupledSusySystem& sys, Sector sector, Complex z, double tol) {
  check_disk(z);
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const Rational k = bargmann_index(sys, sector);
  if (z == Complex(0.0, 0.0)) return build(sector, k, z, 0);
  const double two_k = 2 * to_double(k);
  Complex c(std::pow(1.0 - std::norm(z), to_double(k)), 0.0);
  for (int M = 0;; ++M) {
    const Complex next = c * z * std::sqrt((M + two_k) / (M + 1));
    if (coherent_tail_bound(k, z, M, next) < tol) return build(sector, k, z, M);
    c = next;
    if (M > 10'000'000) throw PrecisionError("coherent state truncation did not converge");
  }
}

Sector half_lowering_partner(Sector sector) {
  switch (sector) {
    case Sector::PSI: return Sector::PSI_TILDE;
    case Sector::PHI_TILDE: return Sector::PHI;
    default: throw DomainError("half-lowering is defined for the PSI and PHI_TILDE towers");
  }
}

Complex half_lowering_scalar(const CoupledSusySystem& sys, Sector sector, Complex z) {
  check_disk(z);
  const double weight = sector == Sector::PSI ? to_double(Rational(-sys.gamma)) : to_double(sys.delta);
  half_lowering_partner(sector);
  return std::sqrt(weight) * z / std::sqrt(1.0 - std::norm(z));
}

HalfLoweringCheck verify_half_lowering(const CoupledSusySystem& sys, Sector sector, Complex z, double tol,
                                       std::optional<Complex> scalar) {
  if (sys.broken) throw DomainError("half-lowering needs an unbroken system");
  HalfLoweringCheck check;
  check.source = sector;
  check.target = half_lowering_partner(sector);
  check.op = sector == Sector::PSI ? Generator::A : Generator::BDAG;
  check.source_k = bargmann_index(sys, sector);
  check.target_k = bargmann_index(sys, check.target);
  check.z = z;
  check.scalar = scalar ? *scalar : half_lowering_scalar(sys, sector, z);
  check.tol = tol;

  const auto source = coherent_state(sys, sector, z, tol);
  check.M = source.M;
  // Image coefficients, indexed by the partner's own offset (j = level -
  // first_level of the partner). Both partners start one index below the
  // source: a psi_m lands on psi~_m (index m-1), b† phi~_m on phi_(m-1).
  std::vector<Complex> image;
  for (int m = 1; m <= source.M; ++m) {
    const auto relation = sector == Sector::PSI ? LoweringRelation::A_ON_PSI : LoweringRelation::BDAG_ON_PHI_TILDE;
    image.push_back(source.coefficients[static_cast<std::size_t>(m)] * lowering_factor(sys, relation, m));
  }
  const auto partner = coherent_coefficients(check.target_k, z, std::max(0, source.M - 1));
  double sum = 0.0;
  for (std::size_t j = 0; j < image.size(); ++j) sum += std::norm(image[j] - check.scalar * partner[j]);
  check.residual = std::sqrt(sum);
  check.pass = check.residual < tol;
  return check;
}

FullLoweringCheck check_full_lowering(const CoupledSusySystem& sys, Complex z, double tol, double threshold) {
  if (sys.broken) throw DomainError("full lowering needs an unbroken system");
  FullLoweringCheck check;
  check.z = z;
  const auto state = coherent_state(sys, Sector::PSI, z, tol);
  // b†a psi_m = mu_m psi_(m-1) with mu_m^2 = lambda_1^2(m) lambda_3^2(m).
  std::vector<Complex> image;
  for (int m = 1; m <= state.M; ++m) {
    const double mu = lowering_factor(sys, LoweringRelation::A_ON_PSI, m) *
                      lowering_factor(sys, LoweringRelation::BDAG_ON_PSI_TILDE, m);
    image.push_back(state.coefficients[static_cast<std::size_t>(m)] * mu);
  }
  Complex dot(0.0, 0.0);
  double self = 0.0, image_norm = 0.0;
  for (std::size_t j = 0; j < image.size(); ++j) {
    dot += std::conj(state.coefficients[j]) * image[j];
    self += std::norm(state.coefficients[j]);
    image_norm += std::norm(image[j]);
  }
  if (image_norm == 0.0) {
    check.not_eigenstate = false;
    return check;
  }
  check.best_scalar = dot / self;
  double residual = 0.0;
  for (std::size_t j = 0; j < image.size(); ++j)
    residual += std::norm(image[j] - check.best_scalar * state.coefficients[j]);
  check.normalized_residual = std::sqrt(residual / image_norm);
  check.not_eigenstate = check.normalized_residual > threshold;
  return check;
}

}  // namespace csusy
