#include "csusy/system.hpp"

#include <stdexcept>

#include "csusy/errors.hpp"

namespace csusy {

std::string_view name(Generator g) {
  switch (g) {
    case Generator::A: return "A";
    case Generator::ADAG: return "ADAG";
    case Generator::B: return "B";
    case Generator::BDAG: return "BDAG";
  }
  return "?";
}

Generator parse_generator(std::string_view text) {
  if (text == "A") return Generator::A;
  if (text == "ADAG") return Generator::ADAG;
  if (text == "B") return Generator::B;
  if (text == "BDAG") return Generator::BDAG;
  throw std::invalid_argument("unknown generator '" + std::string(text) + "'");
}

Generator adjoint(Generator g) {
  switch (g) {
    case Generator::A: return Generator::ADAG;
    case Generator::ADAG: return Generator::A;
    case Generator::B: return Generator::BDAG;
    case Generator::BDAG: return Generator::B;
  }
  return g;
}

std::string to_string(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '*';
    out += name(word[i]);
  }
  return out.empty() ? "I" : out;
}

Word parse_word(std::string_view text) {
  Word word;
  std::string token;
  auto flush = [&] {
    if (!token.empty() && token != "I") word.push_back(parse_generator(token));
    token.clear();
  };
  for (char c : text) {
    if (c == '*' || c == ' ')
      flush();
    else
      token += c;
  }
  flush();
  return word;
}

CoupledSusySystem CoupledSusySystem::with_rule(Generator g, GeneratorRule rule) const {
  CoupledSusySystem out = *this;
  out.rules[static_cast<std::size_t>(g)] = std::move(rule);
  return out;
}

CoupledSusySystem make_xn_system(int n) {
  if (n < 1) throw std::invalid_argument("family index n must be >= 1");
  CoupledSusySystem sys;
  sys.n = n;
  sys.gamma = -1;
  sys.delta = 2 * n - 1;
  // Differentiating x^k e^{-x^{2n}/(2n)} gives (k x^{k-1} - x^{k+2n-1}) e^{-g};
  // the x^{k+n} pieces cancel in a and b† and double in a† and b.
  sys.rules[static_cast<std::size_t>(Generator::A)] = {1, 0, 0};
  sys.rules[static_cast<std::size_t>(Generator::ADAG)] = {-1, n - 1, 2};
  sys.rules[static_cast<std::size_t>(Generator::B)] = {-1, 0, 2};
  sys.rules[static_cast<std::size_t>(Generator::BDAG)] = {1, 1 - n, 0};
  return sys;
}

GaussPolyState apply_generator(const CoupledSusySystem& sys, Generator g, const GaussPolyState& f) {
  if (f.n() != sys.n) throw FamilyMismatch("state family index does not match the system");
  const auto& rule = sys.rule(g);
  const int n = sys.n;
  GaussPolyState::TermMap out;
  for (const auto& [k, c] : f.terms()) {
    const Rational lower = rule.slope * k + rule.offset;
    if (lower != 0) out[k - n] += lower * c;
    if (rule.raise != 0) out[k + n] += rule.raise * c;
  }
  return GaussPolyState(n, std::move(out), f.sqrt2_power() + 1);
}

GaussPolyState apply_word(const CoupledSusySystem& sys, const Word& word, const GaussPolyState& f) {
  if (f.n() != sys.n) throw FamilyMismatch("state family index does not match the system");
  GaussPolyState out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_generator(sys, *it, out);
  return out;
}

}  // namespace csusy
