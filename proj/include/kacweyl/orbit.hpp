#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "kacweyl/weyl.hpp"

namespace kacweyl {

// Point of the W_v-orbit of eps_v: central value a_v plus one nonnegative
// integer sequence per incidence slot (slot order from slots_at, trailing
// zeros trimmed). Raw candidates may carry arbitrary integers; membership
// decides whether they belong to the orbit.
struct OrbitState {
  std::string vertex;
  Int a_v = 0;
  std::vector<std::vector<Int>> slots;

  void canonicalize();  // trim trailing zeros
  long long depth() const;  // longest slot sequence

  friend bool operator==(const OrbitState&, const OrbitState&) = default;
  friend bool operator<(const OrbitState& a, const OrbitState& b);
};

OrbitState initial_state(const Graph& graph, const std::string& v);

// Generator action on states; g must belong to vertex state.vertex.
OrbitState apply_generator(const Graph& graph, const Generator& g, const OrbitState& state);

Weight state_to_weight(const Graph& graph, const OrbitState& state);
OrbitState state_from_weight(const Graph& graph, const std::string& v, const Weight& w);

struct StateEdge {
  int from = 0;  // state indices; from is the lower level end
  int to = 0;
  Generator gen;
};

struct StateGraph {
  std::vector<OrbitState> states;  // grouped by level, sorted within a level
  std::vector<int> level;          // per state, level 1 = eps_v
  std::vector<StateEdge> edges;

  int find(const OrbitState& s) const;  // index or -1
  std::vector<int> states_at_level(int lvl) const;
};

// All orbit states of level <= max_level. When max_depth >= 0 the slot
// sequences are capped at max_depth entries (the finite-leg truncation);
// otherwise depth is bounded by the level itself.
StateGraph bfs(const Graph& graph, const std::string& v, int max_level, int max_depth = -1);

struct DescentResult {
  bool in_orbit = false;
  Word word;  // reduced; act(word, state) = eps_v
  std::vector<OrbitState> trace;  // start state through eps_v
  OrbitState witness;  // on failure: first offending state
  std::string reason;
};

// Greedy descent: pull each slot's maximum toward the center, then apply s_v.
DescentResult descend(const Graph& graph, const OrbitState& state);

// Decision procedure on raw candidate data. On success, word is the
// X-reduced word with act(word, eps_v) = state.
DescentResult membership(const Graph& graph, const OrbitState& candidate);

// Reduced word of length level-1 mapping eps_v to state. Throws NotInOrbitError.
Word xreduced_word(const Graph& graph, const OrbitState& state);

// Numeric conditions a state must satisfy to lie in the orbit (valence >= 3);
// empty result means all hold.
std::vector<std::string> state_invariant_violations(const Graph& graph, const OrbitState& state);

nlohmann::json state_to_json(const OrbitState& state);
OrbitState state_from_json(const nlohmann::json& j);
nlohmann::json state_graph_to_json(const StateGraph& sg);

}  // namespace kacweyl
