#include "csusy/operator_expr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "csusy/errors.hpp"

namespace csusy {

OperatorExpr OperatorExpr::identity(const Rational& c) { return of(Word{}, c); }

OperatorExpr OperatorExpr::of(const Word& word, const Rational& c) {
  OperatorExpr out;
  if (c != 0) out.terms_.push_back({c, word});
  return out;
}

std::size_t OperatorExpr::max_word_length() const {
  std::size_t len = 0;
  for (const auto& t : terms_) len = std::max(len, t.word.size());
  return len;
}

void OperatorExpr::normalize() {
  // Merge equal words, drop zeros, fold even sqrt(2) powers into coefficients.
  std::map<Word, Rational> merged;
  for (auto& t : terms_) merged[t.word] += t.coeff;
  terms_.clear();
  for (auto& [w, c] : merged)
    if (c != 0) terms_.push_back({c, w});
  i_power_ = ((i_power_ % 4) + 4) % 4;
  const int q = s_ >= 0 ? s_ / 2 : -((-s_ + 1) / 2);
  s_ -= 2 * q;
  if (q != 0) {
    Rational scale = 1;
    if (q > 0)
      mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<unsigned long>(q));
    else
      mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<unsigned long>(-q));
    for (auto& t : terms_) t.coeff *= scale;
  }
  if (terms_.empty()) i_power_ = s_ = 0;
}

OperatorExpr OperatorExpr::times_i(int power) const {
  OperatorExpr out = *this;
  out.i_power_ += power;
  out.normalize();
  return out;
}

OperatorExpr OperatorExpr::times_sqrt2_power(int extra) const {
  OperatorExpr out = *this;
  out.s_ += extra;
  out.normalize();
  return out;
}

OperatorExpr OperatorExpr::adjoint() const {
  OperatorExpr out;
  for (const auto& t : terms_) {
    Word w;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) w.push_back(csusy::adjoint(*it));
    out.terms_.push_back({t.coeff, std::move(w)});
  }
  out.i_power_ = 4 - i_power_;
  out.s_ = s_;
  out.normalize();
  return out;
}

GaussPolyState OperatorExpr::apply(const CoupledSusySystem& sys, const GaussPolyState& f) const {
  GaussPolyState out(f.n());
  for (const auto& t : terms_) out += apply_word(sys, t.word, f) * t.coeff;
  return out.times_sqrt2_power(s_);
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if ((other.i_power_ - i_power_) % 2 != 0)
    throw IrrationalSumError("sum of a real and an imaginary operator expression");
  if (other.s_ != s_) throw IrrationalSumError("sum of operator expressions with different sqrt(2) factors");
  // i^(p+2) = -i^p
  const Rational sign = other.i_power_ == i_power_ ? 1 : -1;
  for (const auto& t : other.terms_) terms_.push_back({t.coeff * sign, t.word});
  normalize();
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& other) { return *this += other * Rational(-1); }

OperatorExpr& OperatorExpr::operator*=(const Rational& scalar) {
  for (auto& t : terms_) t.coeff *= scalar;
  normalize();
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Word w = ta.word;
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      out.terms_.push_back({ta.coeff * tb.coeff, std::move(w)});
    }
  out.i_power_ = a.i_power_ + b.i_power_;
  out.s_ = a.s_ + b.s_;
  out.normalize();
  return out;
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

std::string to_string(const OperatorExpr& op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  static const char* phases[] = {"", "i*", "-", "-i*"};
  os << phases[op.i_power()];
  if (op.sqrt2_power()) os << "2^(-1/2)*";
  os << '(';
  for (std::size_t i = 0; i < op.terms().size(); ++i) {
    const auto& t = op.terms()[i];
    if (i) os << " + ";
    os << to_string(t.coeff) << ' ' << to_string(t.word);
  }
  os << ')';
  return os.str();
}

}  // namespace csusy
