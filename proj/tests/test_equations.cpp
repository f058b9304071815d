#include "doctest.h"
#include "slender/brute.hpp"
#include "slender/equations.hpp"
#include "slender/norms.hpp"

using namespace slender;

namespace {

ContextPtr single() { return GroupContext::make({"u"}, {}); }
ContextPtr free2() { return GroupContext::make({"u", "w"}, {}); }

}  // namespace

TEST_CASE("check_solution walks the cascade") {
  const auto z = single();
  const auto sys = constant_system(parse_element(z, "u"), 1, {2, 2});
  const std::vector<GPElement> good{parse_element(z, "u^7"), parse_element(z, "u^3"),
                                    parse_element(z, "u")};
  CHECK(check_solution(sys, good).ok);

  const std::vector<GPElement> bad{parse_element(z, "u^7"), parse_element(z, "u^3"),
                                   parse_element(z, "u^2")};
  const auto outcome = check_solution(sys, bad);
  CHECK_FALSE(outcome.ok);
  CHECK(outcome.failing_index == 1);

  const auto trivial = EquationSystem<GPElement>{
      {identity(z), identity(z)}, {3, 5}};
  const std::vector<GPElement> ids(3, identity(z));
  CHECK(check_solution(trivial, ids).ok);

  const std::vector<GPElement> short_tuple(2, identity(z));
  CHECK_THROWS_AS(check_solution(sys, short_tuple), std::invalid_argument);
  CHECK_THROWS_AS(constant_system(parse_element(z, "u"), 1, {2, 0}), std::invalid_argument);
}

TEST_CASE("bounded_solve examples") {
  const auto f2 = free2();
  const auto sys = constant_system(parse_element(f2, "u"), 1, {2, 2});
  const auto found = bounded_solve(sys, parse_element(f2, "u^7"), 4);
  REQUIRE(found);
  CHECK((*found)[0].str() == "u^7");
  CHECK((*found)[1].str() == "u^3");
  CHECK((*found)[2].str() == "u");
  CHECK(check_solution(sys, *found).ok);

  const auto no_root = constant_system(parse_element(f2, "u"), 1, {2});
  CHECK_FALSE(bounded_solve(no_root, parse_element(f2, "u^2"), 5));

  const auto trivial = EquationSystem<GPElement>{{identity(f2), identity(f2)}, {2, 3}};
  const auto sol = bounded_solve(trivial, identity(f2), 2);
  REQUIRE(sol);
  for (const auto& b : *sol) CHECK(b.is_identity());
}

TEST_CASE("bounded_solve verdicts agree with full enumeration") {
  const auto f2 = free2();
  const GPElement u = parse_element(f2, "u");
  for (const auto& k : std::vector<std::vector<long long>>{{2}, {2, 2}, {3, 2}, {2, 2, 2}}) {
    const auto sys = constant_system(u, 1, k);
    for (const char* b0s : {"e", "u", "u^3", "u^7", "u w", "w^2"}) {
      const GPElement b0 = parse_element(f2, b0s);
      const auto pruned = bounded_solve(sys, b0, 3, true);
      const auto plain = bounded_solve(sys, b0, 3, false);
      const auto exhaustive = brute::enumerate_solve(sys, b0, 3);
      CHECK(pruned.has_value() == exhaustive.has_value());
      CHECK(plain.has_value() == exhaustive.has_value());
      if (pruned) {
        CHECK(check_solution(sys, *pruned).ok);
        CHECK(*pruned == *exhaustive);  // both pick the first candidate in ball order
      }
    }
  }
}

TEST_CASE("cyclic symbolic solutions") {
  CHECK(cyclic_symbolic_solve(1, {2, 2}) == std::vector<long long>{4, 0, -2});
  CHECK(cyclic_symbolic_solve(2, {3}) == std::vector<long long>{3, -1});
  CHECK(cyclic_symbolic_solve(1, {1}) == std::vector<long long>{1, 0});
  CHECK_THROWS_AS(cyclic_symbolic_solve(0, {2}), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_symbolic_solve(1, {0}), std::invalid_argument);
}

TEST_CASE("symbolic solutions substitute back, closed form included") {
  brute::Rng rng(5);
  const auto z = single();
  const GPElement u = parse_element(z, "u");
  std::uniform_int_distribution<long long> jd(1, 3), md(0, 6), kd(1, 5);
  for (int t = 0; t < 200; ++t) {
    const long long j = jd(rng);
    std::vector<long long> k(static_cast<std::size_t>(md(rng)) + 1);
    for (auto& km : k) km = kd(rng);
    const auto e = cyclic_symbolic_solve(j, k);

    long long K = 1, partial = 1, sum = 1;
    for (long long km : k) K *= km;
    for (std::size_t m = 0; m + 1 < k.size(); ++m) {
      partial *= k[m];
      sum += partial;
    }
    CHECK(e.front() == K);
    CHECK(e.back() == 1 - j * sum);

    std::vector<GPElement> sol;
    for (long long em : e) sol.push_back(power(u, em));
    CHECK(check_solution(constant_system(power(u, K), j, k), sol).ok);
  }
}
