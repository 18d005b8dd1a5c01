#include "kacweyl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

namespace kacweyl {

bool Graph::has_vertex(const std::string& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const Edge* Graph::find_edge(const std::string& id) const {
  for (const Edge& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<std::string> validate(const Graph& graph) {
  std::vector<std::string> problems;
  std::set<std::string> vseen;
  for (const auto& v : graph.vertices) {
    if (!vseen.insert(v).second) problems.push_back("duplicate vertex id: " + v);
  }
  std::set<std::string> eseen;
  for (const Edge& e : graph.edges) {
    if (!eseen.insert(e.id).second) problems.push_back("duplicate edge id: " + e.id);
    if (e.source.empty() && e.target.empty())
      problems.push_back("edge " + e.id + " has no endpoints");
    if (!e.source.empty() && !vseen.count(e.source))
      problems.push_back("edge " + e.id + " has undeclared source: " + e.source);
    if (!e.target.empty() && !vseen.count(e.target))
      problems.push_back("edge " + e.id + " has undeclared target: " + e.target);
  }
  return problems;
}

std::vector<Slot> slots_at(const Graph& graph, const std::string& v) {
  if (!graph.has_vertex(v)) throw std::invalid_argument("unknown vertex: " + v);
  std::vector<Slot> slots;
  for (const Edge& e : graph.edges) {
    if (e.source == v) slots.push_back({e.id, -1});
    if (e.target == v) slots.push_back({e.id, +1});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.sign < b.sign;
  });
  return slots;
}

int valence(const Graph& graph, const std::string& v) {
  return static_cast<int>(slots_at(graph, v).size());
}

Graph graph_from_json(const nlohmann::json& j) {
  Graph g;
  for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    auto endpoint = [&](const char* key) -> std::string {
      if (!e.contains(key) || e[key].is_null()) return "";
      return e[key].get<std::string>();
    };
    g.edges.push_back({e.at("id").get<std::string>(), endpoint("source"), endpoint("target")});
  }
  return g;
}

nlohmann::json graph_to_json(const Graph& graph) {
  nlohmann::json j;
  j["vertices"] = graph.vertices;
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : graph.edges) {
    nlohmann::json je{{"id", e.id}};
    if (!e.source.empty()) je["source"] = e.source;
    if (!e.target.empty()) je["target"] = e.target;
    j["edges"].push_back(je);
  }
  return j;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  nlohmann::json j;
  in >> j;
  return graph_from_json(j);
}

}  // namespace kacweyl
