#include "slender/cx.hpp"

#include <stdexcept>

namespace slender {

CEElement::CEElement(long long central, std::vector<CESyllable> word)
    : central_(central), word_(std::move(word)) {
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i].n < 2 || word_[i].r <= 0 || word_[i].r >= word_[i].n)
      throw std::invalid_argument("amalgam syllable out of normal form");
    if (i > 0 && word_[i - 1].n == word_[i].n)
      throw std::invalid_argument("adjacent amalgam syllables share an index");
  }
}

CEElement CEElement::generator(long long n, long long r) {
  if (n < 2) throw std::invalid_argument("generator index must be >= 2");
  long long residue = r % n;
  long long carry = (r - residue) / n;
  if (residue < 0) {
    residue += n;
    carry -= 1;
  }
  std::vector<CESyllable> word;
  if (residue != 0) word.push_back({n, residue});
  return CEElement(carry, std::move(word));
}

namespace {

// Appends one normalized syllable, resolving an equal-index merge with a
// central carry and possible deletion.
void push_syllable(std::vector<CESyllable>& stack, long long& central, CESyllable s) {
  if (!stack.empty() && stack.back().n == s.n) {
    const long long sum = stack.back().r + s.r;  // in [2, 2n-2]
    stack.pop_back();
    if (sum >= s.n) {
      central += 1;
      if (sum > s.n) stack.push_back({s.n, sum - s.n});
    } else {
      stack.push_back({s.n, sum});
    }
  } else {
    stack.push_back(s);
  }
}

}  // namespace

CEElement ce_multiply(const CEElement& a, const CEElement& b) {
  long long central = a.central() + b.central();
  std::vector<CESyllable> stack = a.word();
  for (const CESyllable& s : b.word()) push_syllable(stack, central, s);
  return CEElement(central, std::move(stack));
}

CEElement ce_invert(const CEElement& a) {
  std::vector<CESyllable> word;
  word.reserve(a.word().size());
  for (auto it = a.word().rbegin(); it != a.word().rend(); ++it)
    word.push_back({it->n, it->n - it->r});
  // Each syllable inverse x_n^{-r} = z^-1 x_n^{n-r} contributes one carry.
  return CEElement(-a.central() - static_cast<long long>(a.word().size()), std::move(word));
}

CEElement ce_power(const CEElement& a, long long n) {
  if (n < 0) return ce_power(ce_invert(a), -n);
  CEElement result;
  CEElement base = a;
  while (n > 0) {
    if (n & 1) result = ce_multiply(result, base);
    n >>= 1;
    if (n) base = ce_multiply(base, base);
  }
  return result;
}

std::string CEElement::str() const {
  if (is_identity()) return "e";
  std::string out;
  if (central_ != 0) {
    out = "z";
    if (central_ != 1) out += "^" + std::to_string(central_);
  }
  for (const CESyllable& s : word_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(s.n);
    if (s.r != 1) out += "^" + std::to_string(s.r);
  }
  return out;
}

CEElement parse_ce(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw std::invalid_argument("empty element string");
  if (tokens.size() == 1 && tokens[0] == "e") return CEElement();

  auto parse_exp = [](const std::string& tok, std::size_t caret) -> long long {
    if (caret == std::string::npos) return 1;
    const std::string digits = tok.substr(caret + 1);
    try {
      std::size_t used = 0;
      const long long e = std::stoll(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(digits);
      return e;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad token \"" + tok + "\": malformed exponent");
    }
  };

  CEElement out;
  bool first = true;
  for (const std::string& tok : tokens) {
    const auto caret = tok.find('^');
    const std::string head = tok.substr(0, caret);
    if (head == "z") {
      if (!first)
        throw std::invalid_argument("bad token \"" + tok + "\": central power must come first");
      out = CEElement::z_power(parse_exp(tok, caret));
    } else if (head.size() >= 2 && head[0] == 'x' &&
               head.find_first_not_of("0123456789", 1) == std::string::npos) {
      out = ce_multiply(out, CEElement::generator(std::stoll(head.substr(1)),
                                                  parse_exp(tok, caret)));
    } else {
      throw std::invalid_argument("bad token \"" + tok + "\": expected z or xN");
    }
    first = false;
  }
  return out;
}

std::vector<CESyllable> ce_quotient(const CEElement& a) { return a.word(); }

std::string quotient_str(const std::vector<CESyllable>& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += "x" + std::to_string(w[i].n);
    if (w[i].r != 1) out += "^" + std::to_string(w[i].r);
  }
  return out;
}

EquationSystem<CEElement> ce_cascade_system(long long j, const std::vector<long long>& k) {
  return constant_system(CEElement::z_power(1), j, k);
}

std::vector<CEElement> ce_solve_system(long long j, const std::vector<long long>& k) {
  const std::vector<long long> e = cyclic_symbolic_solve(j, k);
  long long K = 1;
  for (long long km : k) K *= km;
  if (K < 2)
    throw std::invalid_argument("ce_solve_system: k_0...k_M = " + std::to_string(K) +
                                " < 2 gives no proper root of z");
  std::vector<CEElement> sol;
  sol.reserve(e.size());
  const CEElement h = CEElement::generator(K);
  for (long long em : e) sol.push_back(ce_power(h, em));
  return sol;
}

}  // namespace slender
