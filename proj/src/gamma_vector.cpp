#include "csusy/gamma_vector.hpp"

#include <sstream>
#include <stdexcept>

#include "csusy/errors.hpp"
#include "text_util.hpp"

namespace csusy {

GammaVector::GammaVector(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("family index n must be positive");
}

GammaVector::GammaVector(int n, CoeffMap coeffs, int sqrt2_power)
    : n_(n), w_(sqrt2_power), coeffs_(std::move(coeffs)) {
  if (n < 1) throw std::invalid_argument("family index n must be positive");
  for (const auto& [r, c] : coeffs_)
    if (r < 1 || r > 2 * n - 1 || r % 2 == 0)
      throw std::invalid_argument("GammaVector symbol index must be odd and in [1, 2n-1]");
  canonicalize();
}

void GammaVector::canonicalize() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
  if (coeffs_.empty()) {
    w_ = 0;
    return;
  }
  const int q = w_ >= 0 ? w_ / 2 : -((-w_ + 1) / 2);
  w_ -= 2 * q;
  if (q != 0) {
    Rational scale = 1;
    if (q > 0)
      mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<unsigned long>(q));
    else
      mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<unsigned long>(-q));
    for (auto& [r, c] : coeffs_) c *= scale;
  }
}

GammaVector GammaVector::times_sqrt2_power(int extra) const { return GammaVector(n_, coeffs_, w_ + extra); }

void GammaVector::accumulate(const GammaVector& other, int sign) {
  if (other.n_ != n_) throw FamilyMismatch("GammaVectors from different families");
  if (other.is_exactly_zero()) return;
  if (is_exactly_zero()) {
    w_ = other.w_;
  } else if (other.w_ != w_) {
    throw IrrationalSumError("sum of GammaVectors whose sqrt(2) factors differ by an odd power");
  }
  for (const auto& [r, c] : other.coeffs_) {
    auto& slot = coeffs_[r];
    if (sign > 0)
      slot += c;
    else
      slot -= c;
    if (slot == 0) coeffs_.erase(r);
  }
  if (coeffs_.empty()) w_ = 0;
}

GammaVector& GammaVector::operator+=(const GammaVector& other) {
  accumulate(other, +1);
  return *this;
}

GammaVector& GammaVector::operator-=(const GammaVector& other) {
  accumulate(other, -1);
  return *this;
}

GammaVector& GammaVector::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    w_ = 0;
    return *this;
  }
  for (auto& [r, c] : coeffs_) c *= scalar;
  return *this;
}

bool GammaVector::confirm_nonzero() const {
  if (is_exactly_zero()) return false;
  const auto v = evaluate_gamma_vector(*this, 1e-30);
  return abs(v.value) > 1000 * v.abs_error;
}

GammaVector inner_product(const GaussPolyState& f, const GaussPolyState& g) {
  if (f.n() != g.n()) throw FamilyMismatch("inner product of states from different families");
  const int n = f.n();
  const int period = 2 * n;

  std::map<int, Rational> integrand;
  for (const auto& [k, c] : f.terms())
    for (const auto& [l, d] : g.terms()) integrand[k + l] += c * d;

  GammaVector::CoeffMap coeffs;
  for (const auto& [j, d] : integrand) {
    if (d == 0) continue;
    if (j <= -1)
      throw DivergenceError("integrand term x^" + std::to_string(j) +
                            " is not integrable at x = 0");
    if (j % 2 != 0) continue;
    // int_R x^j e^{-x^{2n}/n} dx = Gamma((j+1)/(2n)) n^{(j+1)/(2n)} / n, then
    // Gamma(s + t) = Gamma(s) * prod_{i<t} (s + i) with s = r/(2n).
    const int r = (j + 1) % period;
    const int t = (j + 1 - r) / period;
    Rational factor = make_rational(1, n);
    for (int i = 0; i < t; ++i) factor *= make_rational(r + i * period, period) * n;
    coeffs[r] += d * factor;
  }
  return GammaVector(n, std::move(coeffs), f.sqrt2_power() + g.sqrt2_power());
}

std::optional<StateRatio> exact_ratio(const GammaVector& a, const GammaVector& b) {
  if (a.n() != b.n()) throw FamilyMismatch("GammaVectors from different families");
  if (b.is_exactly_zero()) return std::nullopt;
  const auto& [r0, c0] = *b.coeffs().begin();
  const Rational candidate = a.is_exactly_zero() ? Rational(0) : [&] {
    auto it = a.coeffs().find(r0);
    return it == a.coeffs().end() ? Rational(0) : Rational(it->second / c0);
  }();
  const int w = a.sqrt2_power() - b.sqrt2_power();
  if ((b * candidate).times_sqrt2_power(w) == a) return StateRatio{candidate, candidate == 0 ? 0 : w};
  return std::nullopt;
}

GammaValue evaluate_gamma_vector(const GammaVector& v, double rel_precision, unsigned max_bits) {
  if (rel_precision <= 0) throw std::invalid_argument("precision must be positive");
  if (v.is_exactly_zero()) {
    PrecisionScope scope(64);
    return GammaValue{Real(0), Real(0), 64};
  }
  const int n = v.n();
  const double terms = static_cast<double>(v.coeffs().size());
  GammaValue out;
  for (unsigned bits = 64;; bits *= 2) {
    PrecisionScope scope(bits + 32);
    Real sum = 0;
    Real magnitude = 0;
    for (const auto& [r, c] : v.coeffs()) {
      const Real s = Real(r) / (2 * n);
      Real term = to_real(c) * tgamma(s) * pow(Real(n), s);
      if (v.sqrt2_power() == 1) term /= sqrt(Real(2));
      sum += term;
      magnitude += abs(term);
    }
    // Each term carries a few ulps from rounding its inputs and the correctly
    // rounded Gamma/pow calls; summation adds one ulp per term.
    const Real ulp = ldexp(Real(1), -static_cast<int>(bits + 32));
    const Real error = 32 * (terms + 1) * ulp * magnitude;
    out = GammaValue{sum, error, bits + 32};
    if (error <= Real(rel_precision) * abs(sum) || bits >= max_bits) return out;
  }
}

double to_double(const GammaVector& v) { return static_cast<double>(evaluate_gamma_vector(v).value); }

std::string to_string(const GammaVector& v) {
  std::ostringstream os;
  os << v.n() << "; " << v.sqrt2_power() << "; ";
  bool first = true;
  for (const auto& [r, c] : v.coeffs()) {
    if (!first) os << ", ";
    os << r << ':' << to_string(c);
    first = false;
  }
  return os.str();
}

GammaVector parse_gamma_vector(std::string_view text) {
  const auto parts = detail::split(text, ';');
  if (parts.size() != 3) throw std::invalid_argument("GammaVector text must have the form 'n; w; r:c, ...'");
  const int n = detail::parse_int(detail::trim(parts[0]));
  const int w = detail::parse_int(detail::trim(parts[1]));
  GammaVector::CoeffMap coeffs;
  const auto body = detail::trim(parts[2]);
  if (!body.empty()) {
    for (auto item : detail::split(body, ',')) {
      item = detail::trim(item);
      const auto colon = item.find(':');
      if (colon == std::string_view::npos) throw std::invalid_argument("entry without ':'");
      const int r = detail::parse_int(detail::trim(item.substr(0, colon)));
      if (coeffs.count(r)) throw std::invalid_argument("duplicate symbol index");
      coeffs.emplace(r, parse_rational(detail::trim(item.substr(colon + 1))));
    }
  }
  return GammaVector(n, std::move(coeffs), w);
}

}  // namespace csusy
