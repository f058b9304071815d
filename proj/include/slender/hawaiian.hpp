#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace slender {

/// Letter a_index raised to a nonzero exponent.
struct Letter {
  long long index;
  long long exponent;
  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word: nonzero exponents, adjacent indices distinct.
using FreeWord = std::vector<Letter>;

FreeWord reduce_word(FreeWord raw);
FreeWord word_concat(FreeWord a, const FreeWord& b);
FreeWord word_inverse(const FreeWord& a);
FreeWord word_power(const FreeWord& a, long long n);
std::string word_str(const FreeWord& w);
/// Grammar: "e" or space-separated "aINDEX" with optional "^EXPONENT".
FreeWord parse_word(std::string_view text);

/// A reduced word together with the level it was truncated to: only
/// letters of index < level occur.
struct TruncatedWord {
  long long level;
  FreeWord word;
  bool operator==(const TruncatedWord&) const = default;
};

/// The retraction p_level: delete letters of index >= level, then reduce.
TruncatedWord project(const FreeWord& w, long long level);

/// Alternating factorization of w into maximal blocks using only letters
/// of index < m and blocks using only letters of index >= m.
std::vector<FreeWord> split_blocks(const TruncatedWord& w, long long m);

/// A coherent truncation family U_m = W(m) * U_{m+1}^{k(m)}: the
/// coefficient words W(m) use only letters of index >= floor(m), with
/// floor nondecreasing and unbounded, so every projection terminates.
class LazyWord {
public:
  LazyWord(std::function<FreeWord(long long)> coefficient,
           std::function<long long(long long)> floor,
           std::function<long long(long long)> exponent);

  /// Fixture format: {"W": ["a0", ...], "floor": "identity", "k": [2, ...]}.
  /// Beyond the listed prefix W(m) is the single letter a_m and k repeats
  /// its last entry; "identity" declares floor(m) = m.
  static LazyWord from_json(const nlohmann::json& doc);

  FreeWord coefficient(long long m) const;
  long long floor(long long m) const;
  long long exponent(long long m) const;

  /// p_level(U_m), memoized per (m, level).
  TruncatedWord project(long long m, long long level) const;

private:
  std::function<FreeWord(long long)> coefficient_;
  std::function<long long(long long)> floor_;
  std::function<long long(long long)> exponent_;

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<long long, long long>, FreeWord> entries;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace slender
