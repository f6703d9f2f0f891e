#include "csusy/rational.hpp"

#include <stdexcept>

namespace csusy {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  };

  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num_text) || !is_int(den_text) || den_text[0] == '-' || den_text[0] == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer num{std::string(strip_plus(num_text))};
  Integer den{std::string(den_text)};
  return make_rational(num, den);
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace csusy
