#include <random>

#include "doctest.h"
#include "slender/hawaiian.hpp"

using namespace slender;

namespace {

LazyWord doubling_fixture() {
  return LazyWord([](long long m) { return FreeWord{{m, 1}}; },
                  [](long long m) { return m; }, [](long long) { return 2; });
}

FreeWord random_reduced(std::mt19937_64& rng, long long letters, long long max_len) {
  std::uniform_int_distribution<long long> idx(0, letters - 1), expd(-3, 3), len(0, max_len);
  FreeWord w;
  const long long n = len(rng);
  for (long long i = 0; i < n; ++i) w.push_back({idx(rng), expd(rng)});
  return reduce_word(std::move(w));
}

}  // namespace

TEST_CASE("projection deletes high letters and reduces") {
  CHECK(word_str(project(parse_word("a0 a3 a1 a3^-1"), 2).word) == "a0 a1");
  CHECK(word_str(project(parse_word("a0 a1 a0^-1"), 1).word) == "e");
  CHECK(word_str(project(parse_word("a5 a2 a7"), 0).word) == "e");
}

TEST_CASE("projections compose to the minimum level") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 1000; ++t) {
    const FreeWord w = random_reduced(rng, 9, 12);
    for (long long k = 0; k <= 8; ++k)
      for (long long m = 0; m <= 8; ++m)
        CHECK(project(project(w, m).word, k).word == project(w, std::min(k, m)).word);
  }
}

TEST_CASE("split factors into alternating blocks") {
  auto blocks = split_blocks(project(parse_word("a0 a2 a1"), 3), 2);
  REQUIRE(blocks.size() == 3);
  CHECK(word_str(blocks[0]) == "a0");
  CHECK(word_str(blocks[1]) == "a2");
  CHECK(word_str(blocks[2]) == "a1");

  blocks = split_blocks(project(parse_word("a0 a1"), 2), 2);
  REQUIRE(blocks.size() == 1);
  CHECK(word_str(blocks[0]) == "a0 a1");

  blocks = split_blocks(project(parse_word("a2 a3"), 4), 2);
  REQUIRE(blocks.size() == 1);
  CHECK(word_str(blocks[0]) == "a2 a3");

  CHECK_THROWS_AS(split_blocks(project(parse_word("a0"), 1), 2), std::invalid_argument);
}

TEST_CASE("split blocks concatenate back to the word") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 2000; ++t) {
    const FreeWord w = random_reduced(rng, 4, 8);
    const TruncatedWord tw = project(w, 4);
    for (long long m = 0; m <= 4; ++m) {
      FreeWord joined;
      bool last_low = false;
      bool first = true;
      for (const FreeWord& block : split_blocks(tw, m)) {
        REQUIRE(!block.empty());
        const bool low = block.front().index < m;
        for (const Letter& l : block) CHECK((l.index < m) == low);
        if (!first) CHECK(low != last_low);  // blocks alternate
        last_low = low;
        first = false;
        joined = word_concat(std::move(joined), block);
      }
      CHECK(joined == tw.word);
    }
  }
}

TEST_CASE("lazy projection unfolds the cascade") {
  const LazyWord fixture = doubling_fixture();
  CHECK(word_str(fixture.project(0, 2).word) == "a0 a1^2");
  CHECK(word_str(fixture.project(0, 0).word) == "e");
  CHECK(word_str(fixture.project(0, 3).word) == "a0 a1 a2^2 a1 a2^2");
}

TEST_CASE("lazy truncations solve the truncated cascade at every horizon") {
  const LazyWord fixture = doubling_fixture();
  for (long long level = 0; level <= 8; ++level)
    for (long long m = 0; m <= level; ++m) {
      const FreeWord lhs = fixture.project(m, level).word;
      const FreeWord rhs =
          word_concat(project(fixture.coefficient(m), level).word,
                      word_power(fixture.project(m + 1, level).word, fixture.exponent(m)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("lazy word fixture JSON") {
  const auto lw = LazyWord::from_json(nlohmann::json::parse(
      R"({"W": ["a0", "a1", "a2"], "floor": "identity", "k": [2, 2, 2]})"));
  CHECK(word_str(lw.project(0, 2).word) == "a0 a1^2");
  CHECK(lw.exponent(10) == 2);                     // tail repeats the last k
  CHECK(lw.coefficient(7) == FreeWord{{7, 1}});    // tail rule W(m) = a_m

  CHECK_THROWS_AS(LazyWord::from_json(nlohmann::json::parse(R"({"bogus": 1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(LazyWord::from_json(nlohmann::json::parse(
                      R"({"W": [], "floor": "constant", "k": [2]})")),
                  std::invalid_argument);
}

TEST_CASE("lazy word invariants are enforced") {
  const LazyWord below_floor([](long long) { return FreeWord{{0, 1}}; },
                             [](long long m) { return m; }, [](long long) { return 2; });
  CHECK_THROWS_AS(below_floor.project(3, 5), std::invalid_argument);

  const LazyWord zero_exponent([](long long m) { return FreeWord{{m, 1}}; },
                               [](long long m) { return m; }, [](long long) { return 0; });
  CHECK_THROWS_AS(zero_exponent.project(0, 1), std::invalid_argument);
}

TEST_CASE("word grammar round trips") {
  for (const char* s : {"e", "a0", "a1^2", "a0 a1^-3 a0^2", "a12^-1"}) {
    CHECK(word_str(parse_word(s)) == s);
  }
  CHECK_THROWS_AS(parse_word("b0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a0^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
}
