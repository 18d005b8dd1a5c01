#include <doctest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "kacweyl/characters.hpp"
#include "kacweyl/errors.hpp"

using namespace kacweyl;
using namespace kacweyl::testing;

namespace {

Graph star3_data() {
  std::ifstream in(std::string(KACWEYL_DATA_DIR) + "/star3.json");
  REQUIRE(in.good());
  return graph_from_json(nlohmann::json::parse(in));
}

Graph edge_graph() {
  Graph g;
  g.vertices = {"a", "b"};
  g.edges = {{"e1", "a", "b"}};
  return g;
}

const std::string kGoldenExample55 =
    "1/ch(M(0)) =\n"
    "  + ch(L(0; 0; 0; 0))\n"
    "  - ch(L(-1; -1; -1; -1))\n"
    "  + ch(L(-2; -1,-1; -2; -2))\n"
    "  + ch(L(-2; -2; -1,-1; -2))\n"
    "  + ch(L(-2; -2; -2; -1,-1))\n"
    "  - ch(L(-3; -1,-1,-1; -3; -3))\n"
    "  - ch(L(-3; -2,-1; -2,-1; -3))\n"
    "  - ch(L(-3; -2,-1; -3; -2,-1))\n"
    "  - ch(L(-3; -3; -1,-1,-1; -3))\n"
    "  - ch(L(-3; -3; -2,-1; -2,-1))\n"
    "  - ch(L(-3; -3; -3; -1,-1,-1))\n";

}  // namespace

TEST_CASE("dominance checks") {
  Graph g = star3_data();
  CHECK(is_dominant(g, Weight{}).ok);
  CHECK(is_dominant(g, make_weight({{Coord::central("v"), -5}})).ok);
  CHECK(is_dominant(g, make_weight({{Coord::central("v"), -2},
                                    {Coord::leg("t1", -1), -2},
                                    {Coord::leg("t1", -2), -1}})).ok);

  auto bad_chain = is_dominant(g, make_weight({{Coord::leg("t1", -1), -1},
                                               {Coord::leg("t1", -2), -2}}));
  REQUIRE_FALSE(bad_chain.ok);
  CHECK(bad_chain.violations[0] == "chain t1:- fails at depth 1: -1 > -2");

  auto positive_tail = is_dominant(g, make_weight({{Coord::leg("t2", -1), 1}}));
  REQUIRE_FALSE(positive_tail.ok);
  CHECK(positive_tail.violations[0] == "chain t2:- fails at depth 1: 1 > 0");

  auto central = is_dominant(g, make_weight({{Coord::central("v"), 5}}));
  REQUIRE_FALSE(central.ok);
  CHECK(central.violations[0] == "central pairing at v is -5 < 0");
}

TEST_CASE("verma labels") {
  Graph g = star3_data();
  VermaLabel zero = verma_label(g, Weight{});
  CHECK(zero.edge_labels.at("t1") == Bipartition());
  CHECK(zero.grading.at("v") == std::make_pair(Int(0), Int(0)));

  // Level-1 denominator term on the star: -alpha_v has lambda = (1) per edge.
  VermaLabel level1 = verma_label(g, dot_zero(g, {SimpleRootId::central("v")}));
  for (const std::string& e : {"t1", "t2", "t3"}) {
    CHECK(level1.edge_labels.at(e) == Bipartition({1}, {}));
  }
  CHECK(level1.grading.at("v") == std::make_pair(Int(-1), Int(0)));

  Weight w = make_weight({{Coord::central("v"), -3},
                          {Coord::leg("t1", -1), -3},
                          {Coord::leg("t2", -1), -2}, {Coord::leg("t2", -2), -1},
                          {Coord::leg("t3", -1), -2}, {Coord::leg("t3", -2), -1}});
  VermaLabel label = verma_label(g, w);
  CHECK(label.edge_labels.at("t1") == Bipartition({3}, {}));
  CHECK(label.edge_labels.at("t2") == Bipartition({2, 1}, {}));
  CHECK(label.edge_labels.at("t3") == Bipartition({2, 1}, {}));

  CHECK_THROWS_AS(verma_label(g, make_weight({{Coord::leg("t1", -1), -1},
                                              {Coord::leg("t1", -2), -2}})),
                  NotXDominantError);
  CHECK_THROWS_AS(verma_label(g, make_weight({{Coord::leg("t1", -1), 1}})),
                  NotXDominantError);
}

TEST_CASE("xreduced tuples") {
  Graph g = star3_data();
  CHECK(xreduced_tuples(g, 0).size() == 1);
  auto tuples = xreduced_tuples(g, 3);
  CHECK(tuples.size() == 11);
  for (const WordTuple& t : tuples) {
    CHECK(t.total_length <= 3);
    Word w = t.concatenated(g);
    CHECK(static_cast<long long>(w.size()) == t.total_length);
    CHECK(is_reduced(g, w));
  }
  CHECK(xreduced_tuples(edge_graph(), 1).size() == 3);
  CHECK_THROWS_AS(xreduced_tuples(g, -1), std::invalid_argument);
}

TEST_CASE("character expansion basics") {
  Graph g = star3_data();
  Weight phi = make_weight({{Coord::central("v"), -5}});
  CharacterExpansion trivial = character_expansion(g, phi, 0);
  REQUIRE(trivial.terms.size() == 1);
  CHECK(trivial.terms[0].sign == +1);
  CHECK(trivial.terms[0].weight == phi);

  CharacterExpansion one = character_expansion(g, phi, 1);
  REQUIRE(one.terms.size() == 2);
  CHECK(one.terms[1].sign == -1);
  CHECK(one.terms[1].weight == dot(g, {SimpleRootId::central("v")}, phi));
  CHECK(one.terms[1].label.edge_labels.at("t1") == Bipartition({6}, {}));

  CHECK_THROWS_AS(character_expansion(g, make_weight({{Coord::central("v"), 5}}), 1),
                  std::invalid_argument);
}

TEST_CASE("length-1 terms subtract one simple root per vertex") {
  Graph g = loop_star();
  CharacterExpansion exp = denominator_expansion(g, 1);
  REQUIRE(exp.terms.size() == 5);
  CHECK(exp.terms[0].length == 0);
  std::vector<Weight> got, expected;
  for (size_t i = 1; i < exp.terms.size(); ++i) {
    CHECK(exp.terms[i].length == 1);
    got.push_back(exp.terms[i].weight);
  }
  for (const std::string& v : g.vertices)
    expected.push_back(-simple_root(g, SimpleRootId::central(v)));
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("denominator on the 3-leg star") {
  Graph g = star3_data();
  CharacterExpansion exp = denominator_expansion(g, 2);
  REQUIRE(exp.terms.size() == 5);
  std::vector<long long> lengths;
  for (const VermaTerm& t : exp.terms) {
    lengths.push_back(t.length);
    CHECK(t.sign == (t.length % 2 == 0 ? +1 : -1));
  }
  CHECK(lengths == std::vector<long long>{0, 1, 2, 2, 2});

  CharacterExpansion full = denominator_expansion(g, 3);
  CHECK(full.terms.size() == 11);
  CHECK(example55_style(g, full, /*denominator=*/true) == kGoldenExample55);
}

TEST_CASE("character header and JSON shape") {
  Graph g = star3_data();
  Weight phi = make_weight({{Coord::central("v"), -5}});
  CharacterExpansion exp = character_expansion(g, phi, 1);
  std::string text = example55_style(g, exp, /*denominator=*/false);
  CHECK(text.rfind("ch(L(-5; 0; 0; 0)) =\n", 0) == 0);
  CHECK(text.find("  + ch(M(-5; 0; 0; 0))") != std::string::npos);

  nlohmann::json j = expansion_to_json(exp);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["sign"] == 1);
  CHECK(j[0]["length"] == 0);
  CHECK(j[1]["labels"]["t1"]["lambda"] == nlohmann::json::array({6}));
  CHECK(j[1]["grading"]["v"][0] == -11);
}
