#include <random>

#include <stdexcept>
#include <algorithm>
#include "doctest.h"
#include "slender/vertex.hpp"

using namespace slender;

TEST_CASE("integer_roots enumerates divisor pairs") {
  CHECK(integer_roots(4) == std::vector<RootPair>{{4, 1}, {2, 2}, {1, 4}});
  CHECK(integer_roots(0) == std::vector<RootPair>{{0, 1}});
  CHECK(integer_roots(5) == std::vector<RootPair>{{5, 1}, {1, 5}});
  CHECK(integer_roots(-4) == std::vector<RootPair>{{-4, 1}, {-2, 2}, {-1, 4}});
}

TEST_CASE("integer_roots matches the naive scan up to 100") {
  for (long long k = -100; k <= 100; ++k) {
    std::vector<RootPair> naive;
    if (k == 0) {
      naive = {{0, 1}};
    } else {
      for (long long n = 1; n <= (k < 0 ? -k : k); ++n)
        for (long long h = -(k < 0 ? -k : k); h <= (k < 0 ? -k : k); ++h)
          if (n * h == k) naive.push_back({h, n});
      std::sort(naive.begin(), naive.end(),
                [](const RootPair& a, const RootPair& b) { return a.exponent < b.exponent; });
    }
    CHECK(integer_roots(k) == naive);
  }
}

TEST_CASE("integer norm satisfies the Dudley clauses exhaustively") {
  const VertexGroup z = VertexGroup::integers();
  CHECK(z.norm(0) == 0);
  for (long long k = -50; k <= 50; ++k) {
    CHECK(z.norm(k) == z.norm(z.invert(k)));
    for (long long h = -50; h <= 50; ++h) CHECK(z.norm(k + h) <= z.norm(k) + z.norm(h));
    if (k == 0) continue;
    for (long long n = 1; n <= 20; ++n)
      CHECK(z.norm(k * n) >= std::max(n, z.norm(k)));
  }
}

TEST_CASE("cyclic arithmetic") {
  CHECK(cyclic_multiply(make_cyclic(3, 2), make_cyclic(3, 2)) == make_cyclic(3, 1));
  CHECK(cyclic_multiply(make_cyclic(2, 1), make_cyclic(2, 1)) == make_cyclic(2, 0));
  CHECK_THROWS_AS(cyclic_multiply(make_cyclic(3, 1), make_cyclic(4, 1)),
                  std::invalid_argument);
  CHECK(make_cyclic(5, -3).residue == 2);
}

TEST_CASE("group axioms hold on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> val(-1000, 1000);
  for (const VertexGroup& g : {VertexGroup::integers(), VertexGroup::cyclic(7)}) {
    for (int t = 0; t < 1000; ++t) {
      const VElem a = g.canon(val(rng)), b = g.canon(val(rng)), c = g.canon(val(rng));
      CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      CHECK(g.multiply(a, g.identity()) == a);
      CHECK(g.is_identity(g.multiply(a, g.invert(a))));
    }
  }
}

TEST_CASE("cyclic groups refuse the normed parts of the contract") {
  const VertexGroup c5 = VertexGroup::cyclic(5);
  CHECK_FALSE(c5.has_norm());
  CHECK_THROWS_AS(c5.norm(1), std::invalid_argument);
  CHECK_THROWS_AS(c5.roots_with_exponents(1), std::invalid_argument);
  CHECK_THROWS_AS(c5.generators_of_norm_one(), std::invalid_argument);
}

TEST_CASE("vertex group tags") {
  CHECK(VertexGroup::from_tag("Z").is_integers());
  CHECK(VertexGroup::from_tag("Z/12").modulus() == 12);
  CHECK_THROWS_AS(VertexGroup::from_tag("Q"), std::invalid_argument);
  CHECK_THROWS_AS(VertexGroup::from_tag("Z/"), std::invalid_argument);
  CHECK_THROWS_AS(VertexGroup::from_tag("Z/1"), std::invalid_argument);
  CHECK(VertexGroup::cyclic(3).tag() == "Z/3");
}
