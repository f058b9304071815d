#include "doctest.h"
#include "slender/brute.hpp"
#include "slender/gp.hpp"
#include "slender/norms.hpp"

using namespace slender;

namespace {

ContextPtr gamma1() { return GroupContext::make({"u", "v", "w"}, {{"u", "v"}}); }

std::vector<GPElement> commutator_samples(const ContextPtr& ctx, std::size_t count) {
  brute::Rng rng(41);
  const auto pool = ball(ctx, 2);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::set<GPElement> out;
  while (out.size() < count) {
    const GPElement& x = pool[pick(rng)];
    const GPElement& y = pool[pick(rng)];
    const GPElement c = multiply(multiply(x, y), multiply(invert(x), invert(y)));
    if (!c.is_identity() && syllable_length(c) <= 6) out.insert(c);
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("dudley norm sums vertex norms over the canonical form") {
  const auto g1 = gamma1();
  CHECK(dudley_norm(parse_element(g1, "u^2 v^-3")) == 5);
  CHECK(dudley_norm(parse_element(g1, "e")) == 0);
  const GPElement cube = power(parse_element(g1, "u v"), 3);
  CHECK(cube.str() == "u^3 v^3");
  CHECK(dudley_norm(cube) == 6);
  CHECK(dudley_norm(cube) >= std::max<long long>(3, dudley_norm(parse_element(g1, "u v"))));

  const auto torsion = GroupContext::make({"a"}, {}, {VertexGroup::cyclic(4)});
  CHECK_THROWS_AS(dudley_norm(parse_element(torsion, "a")), std::invalid_argument);
}

TEST_CASE("syllable length") {
  const auto g1 = gamma1();
  CHECK(syllable_length(parse_element(g1, "w u w^-1")) == 3);
  CHECK(syllable_length(parse_element(g1, "e")) == 0);
  CHECK(syllable_length(power(parse_element(g1, "u w"), 3)) == 6);
}

TEST_CASE("kernel sigma norm demands kernel membership") {
  const auto g1 = gamma1();
  CHECK(kernel_sigma_norm(parse_element(g1, "u w u^-1 w^-1")) == 4);
  CHECK(kernel_sigma_norm(parse_element(g1, "e")) == 0);
  CHECK_THROWS_AS(kernel_sigma_norm(parse_element(g1, "u^2 w")), std::invalid_argument);
}

TEST_CASE("verify_dudley passes the graph-product norm on a ball") {
  const auto g1 = gamma1();
  const auto report =
      verify_dudley([](const GPElement& x) { return dudley_norm(x); }, ball(g1, 3), 6);
  CHECK(report.ok());
  CHECK(report.samples == ball(g1, 3).size());
}

TEST_CASE("verify_dudley passes the syllable norm on kernel samples") {
  const auto g1 = gamma1();
  const auto samples = commutator_samples(g1, 60);
  const auto report =
      verify_dudley([](const GPElement& x) { return kernel_sigma_norm(x); }, samples, 5);
  CHECK(report.ok());

  for (const GPElement& g : samples)
    for (long long n = 1; n <= 5; ++n)
      CHECK(syllable_length(power(g, n)) >= 2 * n);
}

TEST_CASE("syllable count is not a Dudley norm off the kernel") {
  const auto g1 = gamma1();
  const auto report =
      verify_dudley([](const GPElement& x) { return syllable_length(x); }, ball(g1, 2), 3);
  CHECK_FALSE(report.ok());
  bool found_power_violation = false;
  for (const auto& v : report.violations)
    if (v.clause == "power" && v.element == "u" && v.n == 3 && v.lhs == 1)
      found_power_violation = true;  // l(u^3) = 1 < 3
  CHECK(found_power_violation);
}

TEST_CASE("violation reports are deterministic and ordered") {
  const auto g1 = gamma1();
  const auto a =
      verify_dudley([](const GPElement& x) { return syllable_length(x); }, ball(g1, 2), 3);
  const auto b =
      verify_dudley([](const GPElement& x) { return syllable_length(x); }, ball(g1, 2), 3);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    CHECK(a.violations[i].element == b.violations[i].element);
    CHECK(a.violations[i].n == b.violations[i].n);
  }
}
