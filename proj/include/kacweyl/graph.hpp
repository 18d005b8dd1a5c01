#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace kacweyl {

// An endpoint may be absent (empty string): an amputated arrow end, as in
// the one-vertex star graphs with N dangling legs.
struct Edge {
  std::string id;
  std::string source;
  std::string target;

  bool is_loop() const { return !source.empty() && source == target; }
};

// Decorated graph: oriented edges, loops and multi-edges allowed.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  bool has_vertex(const std::string& v) const;
  const Edge* find_edge(const std::string& id) const;
};

// One incidence of an edge at a vertex. sign = +1 at the target end,
// -1 at the source end; a loop contributes both at its vertex.
struct Slot {
  std::string edge;
  int sign = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
};

// Empty result means the graph is valid; otherwise one message per violation.
std::vector<std::string> validate(const Graph& graph);

// Slots incident to v, ordered by edge id and then sign (-1 before +1).
std::vector<Slot> slots_at(const Graph& graph, const std::string& v);

// |S_v| + |T_v| + 2|L_v|; equals slots_at(graph, v).size().
int valence(const Graph& graph, const std::string& v);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& graph);
Graph load_graph(const std::string& path);

}  // namespace kacweyl
