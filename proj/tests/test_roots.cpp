#include <map>

#include "doctest.h"
#include "slender/brute.hpp"
#include "slender/norms.hpp"
#include "slender/roots.hpp"
#include "slender/vertex.hpp"

using namespace slender;

namespace {

ContextPtr gamma1() { return GroupContext::make({"u", "v", "w"}, {{"u", "v"}}); }
ContextPtr free2() { return GroupContext::make({"u", "w"}, {}); }

std::map<std::string, std::vector<long long>> as_map(const std::vector<RootEntry>& entries) {
  std::map<std::string, std::vector<long long>> out;
  for (const auto& e : entries) out[e.base.str()] = e.exponents;
  return out;
}

}  // namespace

TEST_CASE("root sets of powers of a generator") {
  const auto g1 = gamma1();
  const auto r = as_map(roots(parse_element(g1, "u^4")));
  CHECK(r == std::map<std::string, std::vector<long long>>{
                 {"u", {4}}, {"u^2", {2}}, {"u^4", {1}}});

  // agrees with the vertex-level root enumeration
  for (const auto& [h, n] : integer_roots(4)) {
    auto it = r.find(n == 1 ? "u^4" : (h == 1 ? "u" : "u^" + std::to_string(h)));
    REQUIRE(it != r.end());
    CHECK(std::count(it->second.begin(), it->second.end(), n) == 1);
  }
}

TEST_CASE("identity and rigid elements") {
  const auto g1 = gamma1();
  CHECK(as_map(roots(parse_element(g1, "e"))) ==
        std::map<std::string, std::vector<long long>>{{"e", {1}}});
  CHECK(as_map(roots(parse_element(g1, "u^2 v^2"))) ==
        std::map<std::string, std::vector<long long>>{{"u v", {2}}, {"u^2 v^2", {1}}});
  const auto comm = as_map(roots(parse_element(g1, "u w u^-1 w^-1")));
  CHECK(comm == std::map<std::string, std::vector<long long>>{{"u w u^-1 w^-1", {1}}});
}

TEST_CASE("every reported root re-verifies") {
  const auto f2 = free2();
  for (const GPElement& g : ball(f2, 3))
    for (const RootEntry& e : roots(g))
      for (long long n : e.exponents) CHECK(power(e.base, n) == g);
}

TEST_CASE("slack search finds nothing beyond the Dudley bound") {
  const auto f2 = free2();
  for (const GPElement& g : ball(f2, 3)) {
    if (syllable_length(g) > 2) continue;
    const long long slack = (g.is_identity() ? 0 : dudley_norm(g)) + 2;
    const auto naive = brute::naive_roots(g, slack, slack);
    CHECK(as_map(roots(g)) == as_map(naive));
  }
}

TEST_CASE("power_free_bound") {
  const auto g1 = gamma1();
  std::vector<GPElement> xs{parse_element(g1, "u^4")};
  CHECK(power_free_bound(xs) == 5);
  std::vector<GPElement> id{parse_element(g1, "e")};
  CHECK(power_free_bound(id) == 1);
  xs.push_back(parse_element(g1, "w^6"));
  CHECK(power_free_bound(xs) == 7);
}

TEST_CASE("power_free_bound certifies at its own p and beyond") {
  const auto g1 = gamma1();
  const std::vector<GPElement> xs{parse_element(g1, "u^4"), parse_element(g1, "w u w^-1")};
  const long long p = power_free_bound(xs);
  long long max_norm = 0;
  for (const GPElement& x : xs) max_norm = std::max(max_norm, dudley_norm(x));
  for (const GPElement& h : ball(g1, max_norm)) {
    if (h.is_identity()) continue;
    for (long long k = p; k <= p + 3; ++k) {
      const GPElement hk = power(h, k);
      for (const GPElement& x : xs) CHECK(hk != x);
    }
  }
}

TEST_CASE("roots_closure iterates translated root sets") {
  const auto g1 = gamma1();
  const GPElement u = parse_element(g1, "u");
  auto strs = [](const std::vector<GPElement>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(e.str());
    return out;
  };
  CHECK(strs(roots_closure(u, {parse_element(g1, "e")}, 0)) ==
        std::vector<std::string>{"u^-1"});
  CHECK(strs(roots_closure(u, {parse_element(g1, "e")}, 1)) ==
        std::vector<std::string>{"u^-2"});
  CHECK(strs(roots_closure(u, {parse_element(g1, "u^5")}, 1)) ==
        std::vector<std::string>{"e", "u", "u^3"});
}

TEST_CASE("roots need a norm") {
  const auto torsion = GroupContext::make({"a"}, {}, {VertexGroup::cyclic(5)});
  CHECK_THROWS_AS(roots(parse_element(torsion, "a")), std::invalid_argument);
}
