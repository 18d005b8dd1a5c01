#pragma once

#include <string>

#include "kacweyl/graph.hpp"
#include "kacweyl/weight.hpp"

namespace kacweyl::testing {

// Star with N legs pointing at v (target side active, positive indices).
inline Graph star_in(int n) {
  Graph g;
  g.vertices.push_back("v");
  for (int k = 1; k <= n; ++k) g.edges.push_back({"t" + std::to_string(k), "", "v"});
  return g;
}

// Star with N legs leaving v (source side active, negative indices).
inline Graph star_out(int n) {
  Graph g;
  g.vertices.push_back("v");
  for (int k = 1; k <= n; ++k) g.edges.push_back({"t" + std::to_string(k), "v", ""});
  return g;
}

inline Graph loop_star() {
  Graph g;
  g.vertices = {"v", "l1", "l2", "l3"};
  g.edges = {{"t1", "v", "l1"}, {"t2", "v", "l2"}, {"t3", "v", "l3"}, {"t4", "v", "v"}};
  return g;
}

inline Weight make_weight(std::initializer_list<std::pair<Coord, long long>> entries) {
  Weight w;
  for (const auto& [c, x] : entries) w.set(c, Int(x));
  return w;
}

}  // namespace kacweyl::testing
