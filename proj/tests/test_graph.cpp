#include <stdexcept>
#include "doctest.h"
#include "slender/gp.hpp"
#include "slender/graph.hpp"

using namespace slender;

TEST_CASE("commutes follows the edge set") {
  CommutationGraph g({"u", "v", "w"}, {{"u", "v"}});
  CHECK(g.commutes("u", "v"));
  CHECK_FALSE(g.commutes("u", "w"));
  CHECK_THROWS_AS(g.commutes("u", "x"), std::invalid_argument);
  CHECK_THROWS_AS(g.commutes("u", "u"), std::invalid_argument);
}

TEST_CASE("commutes is symmetric") {
  CommutationGraph g({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}, {"c", "d"}});
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j)
        CHECK(g.commutes(static_cast<int>(i), static_cast<int>(j)) ==
              g.commutes(static_cast<int>(j), static_cast<int>(i)));
}

TEST_CASE("complete and empty graphs") {
  CommutationGraph complete({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  CommutationGraph empty({"a", "b", "c"}, {});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        CHECK(complete.commutes(i, j));
        CHECK_FALSE(empty.commutes(i, j));
      }
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(CommutationGraph({"u", "u"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(CommutationGraph({"u"}, {{"u", "u"}}), std::invalid_argument);
  CHECK_THROWS_AS(CommutationGraph({"u"}, {{"u", "x"}}), std::invalid_argument);
  CHECK_THROWS_AS(CommutationGraph({"e"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(CommutationGraph({"a b"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(CommutationGraph({"a^"}, {}), std::invalid_argument);
}

TEST_CASE("group file parsing") {
  const auto doc = nlohmann::json::parse(
      R"({"vertices": ["u","v","w"], "edges": [["u","v"]],
          "vertex_groups": {"u":"Z","v":"Z","w":"Z"}})");
  const auto ctx = GroupContext::from_json(doc);
  CHECK(ctx->size() == 3);
  CHECK(ctx->graph().commutes("u", "v"));
  CHECK(ctx->group(0).is_integers());

  auto bad = doc;
  bad["extra"] = 1;
  CHECK_THROWS_AS(GroupContext::from_json(bad), std::invalid_argument);

  auto bad_vg = doc;
  bad_vg["vertex_groups"]["x"] = "Z";
  CHECK_THROWS_AS(GroupContext::from_json(bad_vg), std::invalid_argument);

  auto bad_edge = doc;
  bad_edge["edges"].push_back({"u", "x"});
  CHECK_THROWS_AS(GroupContext::from_json(bad_edge), std::invalid_argument);

  // vertex_groups is optional and defaults to Z
  const auto plain = GroupContext::from_json(
      nlohmann::json::parse(R"({"vertices": ["u","w"], "edges": []})"));
  CHECK(plain->group(1).is_integers());

  // cyclic tags parse
  const auto torsion = GroupContext::from_json(nlohmann::json::parse(
      R"({"vertices": ["a"], "edges": [], "vertex_groups": {"a": "Z/3"}})"));
  CHECK(torsion->group(0).modulus() == 3);
  CHECK(torsion->to_json().at("vertex_groups").at("a") == "Z/3");
}
