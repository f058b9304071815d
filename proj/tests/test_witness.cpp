#include "doctest.h"
#include "slender/equations.hpp"
#include "slender/norms.hpp"
#include "slender/witness.hpp"

using namespace slender;

namespace {

ContextPtr gamma1() { return GroupContext::make({"u", "v", "w"}, {{"u", "v"}}); }
ContextPtr free2() { return GroupContext::make({"u", "w"}, {}); }
ContextPtr z2() { return GroupContext::make({"u", "v"}, {{"u", "v"}}); }

}  // namespace

TEST_CASE("dudley witness") {
  const auto f2 = free2();
  const Witness w = dudley_witness(parse_element(f2, "u"));
  CHECK(w.j == 1);
  CHECK(w.p(0) == 4);
  CHECK(w.p(1) == 6);
  CHECK(w.p(2) == 8);
  CHECK(w.p(3) == 10);
  CHECK((*w.depth_bound)(parse_element(f2, "u w")) == 3);

  const auto g1 = gamma1();
  const Witness w2 = dudley_witness(parse_element(g1, "u w"));
  CHECK(w2.p(0) == 6);
  CHECK(w2.p(1) == 9);
  CHECK(w2.p(2) == 12);

  CHECK_THROWS_AS(dudley_witness(identity(f2)), std::invalid_argument);
}

TEST_CASE("refutation certificates validate and fail loudly") {
  const auto f2 = free2();
  const GPElement g = parse_element(f2, "u");
  const Witness w = dudley_witness(g);

  auto cert = refutation_certificate(w, g, parse_element(f2, "u w"), {4, 6, 8, 10});
  CHECK(cert.M == 3);
  CHECK(cert.LB == 5);
  CHECK(cert.Lb0 == 2);
  CHECK(cert.valid);
  std::string why;
  CHECK(certificate_checks(cert, &why));

  auto cert0 = refutation_certificate(w, g, identity(f2), {4, 6});
  CHECK(cert0.M == 1);
  CHECK(cert0.LB == 3);
  CHECK(cert0.valid);
  CHECK(certificate_checks(cert0));

  CHECK_THROWS_AS(refutation_certificate(w, g, parse_element(f2, "u w"), {3, 6, 8, 10}),
                  std::invalid_argument);  // p_0 = 4 does not divide 3
  CHECK_THROWS_AS(refutation_certificate(w, g, parse_element(f2, "u w"), {4, 6}),
                  std::invalid_argument);  // k too short

  // a tampered transcript is rejected by the checker
  auto bad = cert;
  bad.LB = bad.Lb0;
  CHECK_FALSE(certificate_checks(bad, &why));
}

TEST_CASE("finite-roots witness over the ball enumeration") {
  const auto f2 = free2();
  const auto en = ball_enumeration(f2, 3);
  CHECK(en->elements[0].str() == "e");
  CHECK(en->elements[1].str() == "u");
  CHECK(en->elements[2].str() == "u^-1");
  CHECK(en->elements[3].str() == "w");
  CHECK(en->elements[4].str() == "w^-1");

  const Witness w = finite_roots_witness(parse_element(f2, "u"), en);
  CHECK(w.j == 1);
  CHECK(w.p(0) == 2);  // roots(u^-1) = {u^-1}, largest exponent 1
  CHECK((*w.depth_bound)(parse_element(f2, "e")) == 1);
  CHECK((*w.depth_bound)(parse_element(f2, "w")) == 4);
  CHECK_THROWS_AS((*w.depth_bound)(parse_element(f2, "u^9")), std::invalid_argument);

  for (long long m = 0; m + 1 < 6; ++m) CHECK(w.p(m) <= w.p(m + 1));
  for (long long m = 0; m < 6; ++m) CHECK(w.p(m) >= 1);
}

TEST_CASE("finite-roots witness refutes at its own depths") {
  const auto f2 = free2();
  const auto en = ball_enumeration(f2, 3);
  const GPElement g = parse_element(f2, "u");
  const Witness w = finite_roots_witness(g, en);
  for (long long l = 0; l <= 5; ++l) {
    const GPElement b0 = en->elements[static_cast<std::size_t>(l)];
    const long long M = l + 1;
    std::vector<long long> k;
    for (long long m = 0; m <= M; ++m) k.push_back(w.p(m));
    CHECK_FALSE(bounded_solve(constant_system(g, 1, k), b0, 4));
  }
}

TEST_CASE("extension witness on a direct product of two copies of Z") {
  const auto ctx = z2();
  const WitnessFamily fam = direct_sum_witness(ctx);
  CHECK(fam.j == 1);

  const Witness quotient = fam.at(parse_element(ctx, "v"));
  const Witness kernel = fam.at(parse_element(ctx, "u"));
  for (long long m = 0; m < 32; ++m) {
    CHECK(quotient.p(m) == (m + 2) * 2);
    CHECK(kernel.p(m) == (m + 1) * (m + 2) * 2);
  }
  CHECK(quotient.depth_bound.has_value());
  CHECK_FALSE(kernel.depth_bound.has_value());
  CHECK_THROWS_AS(fam.at(identity(ctx)), std::invalid_argument);
}

TEST_CASE("bounded exponent extension scales j and p") {
  const auto f2 = free2();
  const Witness base = dudley_witness(parse_element(f2, "u"));
  const Witness scaled = bounded_exponent_extension_witness(base, 2);
  CHECK(scaled.j == 2);
  CHECK(scaled.method == WitnessMethod::BoundedExponent);
  for (long long m = 0; m < 32; ++m) CHECK(scaled.p(m) == 2 * base.p(m));

  const Witness same = bounded_exponent_extension_witness(base, 1);
  CHECK(same.j == base.j);
  for (long long m = 0; m < 8; ++m) CHECK(same.p(m) == base.p(m));
  CHECK(same.method == WitnessMethod::BoundedExponent);

  CHECK_THROWS_AS(bounded_exponent_extension_witness(base, 0), std::invalid_argument);
}

TEST_CASE("graph product witness composes the sigma extension") {
  const auto g1 = gamma1();
  const WitnessFamily fam = graph_product_witness(g1);
  CHECK(fam.j == 1);
  CHECK(fam.method == WitnessMethod::GraphProduct);

  const Witness kernel = fam.at(parse_element(g1, "u w u^-1 w^-1"));
  CHECK(kernel.method == WitnessMethod::GraphProduct);
  for (long long m = 0; m < 32; ++m) CHECK(kernel.p(m) == (m + 1) * (m + 2) * 5);

  // complete graph: ker(sigma) is trivial, every element takes the quotient branch
  const auto k2 = z2();
  const WitnessFamily wk2 = graph_product_witness(k2);
  const Witness w = wk2.at(parse_element(k2, "u v^2"));
  for (long long m = 0; m < 8; ++m) CHECK(w.p(m) >= 1);

  CHECK_THROWS_AS(graph_product_witness(GroupContext::make({}, {})), std::invalid_argument);
  const auto torsion = GroupContext::make({"a"}, {}, {VertexGroup::cyclic(3)});
  CHECK_THROWS_AS(graph_product_witness(torsion), std::invalid_argument);
}

TEST_CASE("produced p-sequences are positive and nondecreasing") {
  const auto g1 = gamma1();
  std::vector<Witness> witnesses;
  witnesses.push_back(dudley_witness(parse_element(g1, "u w")));
  witnesses.push_back(direct_sum_witness(z2()).at(parse_element(z2(), "u")));
  witnesses.push_back(
      bounded_exponent_extension_witness(dudley_witness(parse_element(g1, "u")), 3));
  witnesses.push_back(graph_product_witness(g1).at(parse_element(g1, "u")));
  for (const Witness& w : witnesses) {
    CHECK(w.p(0) >= 1);
    for (long long m = 0; m + 1 < 32; ++m) CHECK(w.p(m) <= w.p(m + 1));
  }
}

TEST_CASE("composed witnesses agree with bounded search") {
  const auto ctx = z2();
  const WitnessFamily fam = direct_sum_witness(ctx);
  const GPElement g = parse_element(ctx, "v");
  const Witness w = fam.at(g);
  const GPElement b0 = parse_element(ctx, "u v");
  const long long M = (*w.depth_bound)(b0);
  std::vector<long long> k;
  for (long long m = 0; m <= M; ++m) k.push_back(w.p(m));
  CHECK_FALSE(bounded_solve(constant_system(g, w.j, k), b0, 4));
}
