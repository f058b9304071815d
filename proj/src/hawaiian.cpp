#include "slender/hawaiian.hpp"

#include <algorithm>
#include <stdexcept>

namespace slender {

FreeWord reduce_word(FreeWord raw) {
  FreeWord out;
  for (const Letter& l : raw) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().index == l.index) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

FreeWord word_concat(FreeWord a, const FreeWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return reduce_word(std::move(a));
}

FreeWord word_inverse(const FreeWord& a) {
  FreeWord out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back({it->index, -it->exponent});
  return out;
}

FreeWord word_power(const FreeWord& a, long long n) {
  if (n < 0) return word_power(word_inverse(a), -n);
  FreeWord out;
  for (long long t = 0; t < n; ++t) out = word_concat(std::move(out), a);
  return out;
}

std::string word_str(const FreeWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += "a" + std::to_string(w[i].index);
    if (w[i].exponent != 1) out += "^" + std::to_string(w[i].exponent);
  }
  return out;
}

FreeWord parse_word(std::string_view text) {
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
  if (tokens.empty()) throw std::invalid_argument("empty word");
  if (tokens.size() == 1 && tokens[0] == "e") return {};

  FreeWord raw;
  for (const std::string& tok : tokens) {
    const auto caret = tok.find('^');
    const std::string head = tok.substr(0, caret);
    if (head.size() < 2 || head[0] != 'a' ||
        head.find_first_not_of("0123456789", 1) != std::string::npos)
      throw std::invalid_argument("bad token \"" + tok + "\": expected aINDEX");
    long long exp = 1;
    if (caret != std::string::npos) {
      const std::string digits = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        exp = std::stoll(digits, &used);
        if (used != digits.size()) throw std::invalid_argument(digits);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad token \"" + tok + "\": malformed exponent");
      }
    }
    raw.push_back({std::stoll(head.substr(1)), exp});
  }
  return reduce_word(std::move(raw));
}

TruncatedWord project(const FreeWord& w, long long level) {
  if (level < 0) throw std::invalid_argument("projection level must be >= 0");
  FreeWord kept;
  for (const Letter& l : w)
    if (l.index < level) kept.push_back(l);
  return {level, reduce_word(std::move(kept))};
}

std::vector<FreeWord> split_blocks(const TruncatedWord& w, long long m) {
  if (m > w.level)
    throw std::invalid_argument("split point " + std::to_string(m) + " exceeds level " +
                                std::to_string(w.level));
  std::vector<FreeWord> blocks;
  for (const Letter& l : w.word) {
    const bool low = l.index < m;
    if (blocks.empty() || (blocks.back().front().index < m) != low) blocks.push_back({});
    blocks.back().push_back(l);
  }
  return blocks;
}

LazyWord::LazyWord(std::function<FreeWord(long long)> coefficient,
                   std::function<long long(long long)> floor,
                   std::function<long long(long long)> exponent)
    : coefficient_(std::move(coefficient)),
      floor_(std::move(floor)),
      exponent_(std::move(exponent)),
      cache_(std::make_shared<Cache>()) {}

FreeWord LazyWord::coefficient(long long m) const {
  FreeWord w = coefficient_(m);
  const long long f = floor_(m);
  for (const Letter& l : w)
    if (l.index < f)
      throw std::invalid_argument("coefficient W(" + std::to_string(m) +
                                  ") uses a letter below its floor");
  return w;
}

long long LazyWord::floor(long long m) const { return floor_(m); }

long long LazyWord::exponent(long long m) const {
  const long long k = exponent_(m);
  if (k < 1) throw std::invalid_argument("lazy word exponents must be >= 1");
  return k;
}

TruncatedWord LazyWord::project(long long m, long long level) const {
  if (level < 0) throw std::invalid_argument("projection level must be >= 0");
  {
    std::lock_guard<std::mutex> lk(cache_->mutex);
    auto it = cache_->entries.find({m, level});
    if (it != cache_->entries.end()) return {level, it->second};
  }
  FreeWord value;
  if (floor(m) >= level) {
    // base case: U_m only involves letters of index >= floor(m) >= level
  } else {
    constexpr long long kMaxUnfold = 1'000'000;
    if (m > kMaxUnfold) throw std::runtime_error("lazy word floor never reaches the level");
    const TruncatedWord head = slender::project(coefficient(m), level);
    const TruncatedWord tail = project(m + 1, level);
    value = word_concat(head.word, word_power(tail.word, exponent(m)));
  }
  std::lock_guard<std::mutex> lk(cache_->mutex);
  cache_->entries.emplace(std::make_pair(m, level), value);
  return {level, value};
}

LazyWord LazyWord::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("lazy word fixture must be an object");
  for (const auto& item : doc.items())
    if (item.key() != "W" && item.key() != "floor" && item.key() != "k")
      throw std::invalid_argument("lazy word fixture: unknown key \"" + item.key() + "\"");

  std::vector<FreeWord> prefix;
  if (doc.contains("W"))
    for (const auto& w : doc.at("W")) prefix.push_back(parse_word(w.get<std::string>()));
  std::vector<long long> ks;
  if (doc.contains("k"))
    for (const auto& k : doc.at("k")) ks.push_back(k.get<long long>());
  if (ks.empty()) ks.push_back(1);
  const std::string floor_rule = doc.value("floor", std::string("identity"));
  if (floor_rule != "identity")
    throw std::invalid_argument("lazy word fixture: unsupported floor rule \"" + floor_rule +
                                "\"");

  auto coeff = [prefix](long long m) -> FreeWord {
    if (m < static_cast<long long>(prefix.size())) return prefix[static_cast<std::size_t>(m)];
    return {{m, 1}};  // tail rule: W(m) = a_m
  };
  auto floor = [](long long m) { return m; };
  auto expo = [ks](long long m) {
    return m < static_cast<long long>(ks.size()) ? ks[static_cast<std::size_t>(m)] : ks.back();
  };
  return LazyWord(coeff, floor, expo);
}

}  // namespace slender
