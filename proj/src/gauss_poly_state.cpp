#include "csusy/gauss_poly_state.hpp"

#include <sstream>
#include <stdexcept>

#include "csusy/errors.hpp"
#include "csusy/real.hpp"
#include "text_util.hpp"

namespace csusy {

GaussPolyState::GaussPolyState(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("family index n must be positive");
}

GaussPolyState::GaussPolyState(int n, TermMap terms, int sqrt2_power)
    : n_(n), w_(sqrt2_power), terms_(std::move(terms)) {
  if (n < 1) throw std::invalid_argument("family index n must be positive");
  canonicalize();
}

GaussPolyState GaussPolyState::monomial(int n, int exponent, const Rational& coefficient) {
  return GaussPolyState(n, TermMap{{exponent, coefficient}});
}

void GaussPolyState::canonicalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  if (terms_.empty()) {
    w_ = 0;
    return;
  }
  int q = w_ >= 0 ? w_ / 2 : -((-w_ + 1) / 2);
  w_ -= 2 * q;
  if (q != 0) {
    Rational scale = 1;
    if (q > 0)
      mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<unsigned long>(q));
    else
      mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<unsigned long>(-q));
    for (auto& [k, c] : terms_) c *= scale;
  }
}

Rational GaussPolyState::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GaussPolyState::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> GaussPolyState::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::set<int> GaussPolyState::residues() const {
  std::set<int> out;
  const int period = 2 * n_;
  for (const auto& [k, c] : terms_) out.insert(((k % period) + period) % period);
  return out;
}

GaussPolyState GaussPolyState::times_sqrt2_power(int extra) const {
  return GaussPolyState(n_, terms_, w_ + extra);
}

void GaussPolyState::accumulate(const GaussPolyState& other, int sign) {
  if (other.n_ != n_) throw FamilyMismatch("states from different families");
  if (other.is_zero()) return;
  if (is_zero()) {
    w_ = other.w_;
  } else if (other.w_ != w_) {
    throw IrrationalSumError("sum of states whose sqrt(2) factors differ by an odd power");
  }
  for (const auto& [k, c] : other.terms_) {
    auto& slot = terms_[k];
    if (sign > 0)
      slot += c;
    else
      slot -= c;
    if (slot == 0) terms_.erase(k);
  }
  if (terms_.empty()) w_ = 0;
}

GaussPolyState& GaussPolyState::operator+=(const GaussPolyState& other) {
  accumulate(other, +1);
  return *this;
}

GaussPolyState& GaussPolyState::operator-=(const GaussPolyState& other) {
  accumulate(other, -1);
  return *this;
}

GaussPolyState& GaussPolyState::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    w_ = 0;
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

GaussPolyState GaussPolyState::operator-() const {
  GaussPolyState out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

double GaussPolyState::evaluate(double x) const {
  if (is_zero()) return 0.0;
  PrecisionScope scope(256);
  const Real xr = x;
  Real sum = 0;
  for (const auto& [k, c] : terms_) sum += to_real(c) * pow(xr, k);
  const Real weight = exp(-pow(xr, 2 * n_) / (2 * n_));
  Real value = sum * weight;
  if (w_ == 1) value /= sqrt(Real(2));
  return static_cast<double>(value);
}

std::optional<StateRatio> proportionality(const GaussPolyState& f, const GaussPolyState& g) {
  if (f.n() != g.n()) throw FamilyMismatch("states from different families");
  if (g.is_zero()) return std::nullopt;
  const int lead = *g.max_exponent();
  const Rational candidate = f.coefficient(lead) / g.coefficient(lead);
  const int w = f.sqrt2_power() - g.sqrt2_power();
  GaussPolyState scaled = (g * candidate).times_sqrt2_power(w);
  if (scaled == f) return StateRatio{candidate, w};
  return std::nullopt;
}

std::string to_string(const GaussPolyState& state) {
  std::ostringstream os;
  os << state.n() << "; " << state.sqrt2_power() << "; ";
  bool first = true;
  for (const auto& [k, c] : state.terms()) {
    if (!first) os << ", ";
    os << k << ':' << to_string(c);
    first = false;
  }
  return os.str();
}

GaussPolyState parse_state(std::string_view text) {
  const auto parts = detail::split(text, ';');
  if (parts.size() != 3) throw std::invalid_argument("state text must have the form 'n; w; k:c, ...'");
  const int n = detail::parse_int(detail::trim(parts[0]));
  const int w = detail::parse_int(detail::trim(parts[1]));
  GaussPolyState::TermMap terms;
  const auto body = detail::trim(parts[2]);
  if (!body.empty()) {
    for (auto item : detail::split(body, ',')) {
      item = detail::trim(item);
      const auto colon = item.find(':');
      if (colon == std::string_view::npos) throw std::invalid_argument("term without ':'");
      const int k = detail::parse_int(detail::trim(item.substr(0, colon)));
      if (terms.count(k)) throw std::invalid_argument("duplicate exponent in state text");
      terms.emplace(k, parse_rational(detail::trim(item.substr(colon + 1))));
    }
  }
  return GaussPolyState(n, std::move(terms), w);
}

}  // namespace csusy
