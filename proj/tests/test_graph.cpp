#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"

using namespace kacweyl;
using namespace kacweyl::testing;

TEST_CASE("validate accepts the loop example and the empty graph") {
  CHECK(validate(loop_star()).empty());
  CHECK(validate(Graph{}).empty());
}

TEST_CASE("validate reports undeclared endpoints and duplicate ids") {
  Graph g;
  g.vertices = {"a", "a"};
  g.edges = {{"e", "a", "zzz"}, {"e", "a", "a"}, {"dangling", "", ""}};
  auto problems = validate(g);
  REQUIRE(problems.size() == 4);
  CHECK(problems[0] == "duplicate vertex id: a");
  CHECK(problems[1].find("undeclared target: zzz") != std::string::npos);
  CHECK(problems[2] == "duplicate edge id: e");
  CHECK(problems[3] == "edge dangling has no endpoints");
}

TEST_CASE("slots_at orders by edge id then sign, loop counted twice") {
  Graph g = loop_star();
  auto slots = slots_at(g, "v");
  REQUIRE(slots.size() == 5);
  CHECK(slots[0] == Slot{"t1", -1});
  CHECK(slots[1] == Slot{"t2", -1});
  CHECK(slots[2] == Slot{"t3", -1});
  CHECK(slots[3] == Slot{"t4", -1});
  CHECK(slots[4] == Slot{"t4", +1});
  CHECK(slots_at(g, "v") == slots);  // stable
  CHECK_THROWS_AS(slots_at(g, "nope"), std::invalid_argument);
}

TEST_CASE("path a->b->c has one slot of each sign at b") {
  Graph g;
  g.vertices = {"a", "b", "c"};
  g.edges = {{"e1", "a", "b"}, {"e2", "b", "c"}};
  auto slots = slots_at(g, "b");
  REQUIRE(slots.size() == 2);
  CHECK(slots[0] == Slot{"e1", +1});
  CHECK(slots[1] == Slot{"e2", -1});
}

TEST_CASE("valence") {
  CHECK(valence(loop_star(), "v") == 5);
  CHECK(valence(star_in(4), "v") == 4);
  Graph g;
  g.vertices = {"x"};
  CHECK(valence(g, "x") == 0);
}

TEST_CASE("graph JSON round trip, amputated ends omitted") {
  Graph g = star_out(2);
  nlohmann::json j = graph_to_json(g);
  CHECK_FALSE(j["edges"][0].contains("target"));
  Graph back = graph_from_json(j);
  CHECK(back.vertices == g.vertices);
  REQUIRE(back.edges.size() == 2);
  CHECK(back.edges[0].source == "v");
  CHECK(back.edges[0].target.empty());
  CHECK_FALSE(back.edges[0].is_loop());
}
