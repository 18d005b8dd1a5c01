#include "kacweyl/orbit.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#include "kacweyl/errors.hpp"

namespace kacweyl {

void OrbitState::canonicalize() {
  for (auto& seq : slots)
    while (!seq.empty() && seq.back() == 0) seq.pop_back();
}

long long OrbitState::depth() const {
  size_t d = 0;
  for (const auto& seq : slots) d = std::max(d, seq.size());
  return static_cast<long long>(d);
}

bool operator<(const OrbitState& a, const OrbitState& b) {
  if (a.vertex != b.vertex) return a.vertex < b.vertex;
  if (a.a_v != b.a_v) return a.a_v < b.a_v;
  return a.slots < b.slots;
}

OrbitState initial_state(const Graph& graph, const std::string& v) {
  OrbitState s;
  s.vertex = v;
  s.a_v = 1;
  s.slots.resize(slots_at(graph, v).size());
  return s;
}

OrbitState apply_generator(const Graph& graph, const Generator& g, const OrbitState& state) {
  auto slots = slots_at(graph, state.vertex);
  OrbitState result = state;
  result.slots.resize(slots.size());
  if (g.kind == SimpleRootId::Kind::Central) {
    if (g.id != state.vertex)
      throw std::invalid_argument("central generator " + g.key() + " is not at " + state.vertex);
    // Dual-action formulas: s_v(a_v) = (N-1)a_v - sum a_1,
    // s_v(a_{1,k}) = (N-2)a_v - sum_{j != k} a_{1,j}.
    Int n = static_cast<long long>(slots.size());
    Int sum_first = 0;
    for (const auto& seq : result.slots)
      if (!seq.empty()) sum_first += seq[0];
    for (auto& seq : result.slots) {
      if (seq.empty()) seq.push_back(0);
      seq[0] = (n - 2) * state.a_v - (sum_first - seq[0]);
    }
    result.a_v = (n - 1) * state.a_v - sum_first;
  } else {
    size_t idx = slots.size();
    for (size_t i = 0; i < slots.size(); ++i)
      if (slots[i].edge == g.id && slots[i].sign == g.sign) idx = i;
    if (idx == slots.size())
      throw std::invalid_argument("leg generator " + g.key() + " is not at " + state.vertex);
    auto& seq = result.slots[idx];
    size_t j = static_cast<size_t>(g.level);  // swaps entries j-1 and j (0-based)
    if (seq.size() <= j) seq.resize(j + 1);
    std::swap(seq[j - 1], seq[j]);
  }
  result.canonicalize();
  return result;
}

Weight state_to_weight(const Graph& graph, const OrbitState& state) {
  auto slots = slots_at(graph, state.vertex);
  Weight w;
  w.add(Coord::central(state.vertex), state.a_v);
  for (size_t s = 0; s < slots.size() && s < state.slots.size(); ++s)
    for (size_t i = 0; i < state.slots[s].size(); ++i)
      w.add(Coord::leg(slots[s].edge, slots[s].sign * static_cast<long long>(i + 1)),
            state.slots[s][i]);
  return w;
}

OrbitState state_from_weight(const Graph& graph, const std::string& v, const Weight& w) {
  auto slots = slots_at(graph, v);
  OrbitState s;
  s.vertex = v;
  s.a_v = w.coeff(Coord::central(v));
  s.slots.resize(slots.size());
  for (const auto& [c, x] : w.coeffs()) {
    if (c.kind != Coord::Kind::Leg) continue;
    int side = c.index > 0 ? +1 : -1;
    for (size_t k = 0; k < slots.size(); ++k) {
      if (slots[k].edge == c.id && slots[k].sign == side) {
        size_t depth = static_cast<size_t>(c.index * side);
        if (s.slots[k].size() < depth) s.slots[k].resize(depth);
        s.slots[k][depth - 1] = x;
      }
    }
  }
  s.canonicalize();
  return s;
}

int StateGraph::find(const OrbitState& s) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (states[i] == s) return static_cast<int>(i);
  return -1;
}

std::vector<int> StateGraph::states_at_level(int lvl) const {
  std::vector<int> out;
  for (size_t i = 0; i < states.size(); ++i)
    if (level[i] == lvl) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

std::vector<Generator> bfs_generators(const Graph& graph, const std::string& v, int max_level,
                                      int max_depth) {
  std::vector<Generator> gens;
  gens.push_back(SimpleRootId::central(v));
  long long max_index = max_depth >= 0 ? max_depth - 1 : max_level;
  for (const Slot& s : slots_at(graph, v))
    for (long long i = 1; i <= max_index; ++i)
      gens.push_back(SimpleRootId::leg(s.edge, s.sign, i));
  return gens;
}

}  // namespace

StateGraph bfs(const Graph& graph, const std::string& v, int max_level, int max_depth) {
  if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
  auto gens = bfs_generators(graph, v, max_level, max_depth);

  StateGraph sg;
  std::map<OrbitState, int> index;
  auto push = [&](const OrbitState& s, int lvl) {
    index[s] = static_cast<int>(sg.states.size());
    sg.states.push_back(s);
    sg.level.push_back(lvl);
  };
  push(initial_state(graph, v), 1);

  size_t frontier_begin = 0;
  for (int lvl = 1; lvl < max_level; ++lvl) {
    size_t frontier_end = sg.states.size();
    std::set<OrbitState> fresh;
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const Generator& g : gens) {
        OrbitState img = apply_generator(graph, g, sg.states[i]);
        if (img == sg.states[i]) continue;
        if (!index.count(img)) fresh.insert(img);
      }
    }
    for (const OrbitState& s : fresh) push(s, lvl + 1);
    frontier_begin = frontier_end;
    if (fresh.empty()) break;
  }

  // All generator edges among the kept states.
  for (size_t i = 0; i < sg.states.size(); ++i) {
    for (const Generator& g : gens) {
      OrbitState img = apply_generator(graph, g, sg.states[i]);
      if (img == sg.states[i]) continue;
      auto it = index.find(img);
      if (it != index.end() && static_cast<int>(i) < it->second)
        sg.edges.push_back({static_cast<int>(i), it->second, g});
    }
  }
  return sg;
}

std::vector<std::string> state_invariant_violations(const Graph& graph, const OrbitState& state) {
  std::vector<std::string> problems;
  auto slots = slots_at(graph, state.vertex);
  Int n = static_cast<long long>(slots.size());
  if (state.slots.size() != slots.size()) {
    problems.push_back("state has " + std::to_string(state.slots.size()) + " slot sequences, vertex has " +
                       std::to_string(slots.size()) + " slots");
    return problems;
  }
  if (state.a_v < 1) problems.push_back("a_v < 1");
  for (const auto& seq : state.slots)
    for (const Int& x : seq)
      if (x < 0) {
        problems.push_back("negative slot entry");
        goto entries_done;
      }
entries_done:
  for (const auto& seq : state.slots) {
    Int sum = 0;
    for (const Int& x : seq) sum += x;
    if (state.a_v - sum != 1) {
      problems.push_back("a_v - sum over a slot != 1");
      break;
    }
  }
  {
    Int quad = -(n - 2) * state.a_v * state.a_v;
    for (const auto& seq : state.slots)
      for (const Int& x : seq) quad += x * x;
    if (quad != -(n - 2)) problems.push_back("quadratic invariant != -(N-2)");
  }
  if (n > 3) {
    for (const auto& seq : state.slots)
      for (const Int& x : seq)
        if (x % (n - 2) != 0) {
          problems.push_back("(N-2) does not divide every entry");
          goto div_done;
        }
  div_done:;
  }
  return problems;
}

namespace {

DescentResult not_in_orbit(OrbitState witness, std::string reason) {
  DescentResult r;
  r.in_orbit = false;
  r.witness = std::move(witness);
  r.reason = std::move(reason);
  return r;
}

// Plain BFS fallback for valence <= 2, where the descent proof does not
// apply. Searches up to a level bound derived from the candidate size.
DescentResult membership_by_bfs(const Graph& graph, const OrbitState& state) {
  Int size = abs(state.a_v - 1);
  for (const auto& seq : state.slots)
    for (const Int& x : seq) size += abs(x);
  int cap = 2 + state.depth() + (size > 64 ? 64 : size.convert_to<int>()) * 2;

  StateGraph sg = bfs(graph, state.vertex, cap);
  int at = sg.find(state);
  if (at < 0) return not_in_orbit(state, "not reached by BFS up to level " + std::to_string(cap));

  DescentResult r;
  r.in_orbit = true;
  // Walk down one level at a time, collecting generators in application order
  // from the state toward eps_v.
  int cur = at;
  r.trace.push_back(sg.states[cur]);
  while (sg.level[cur] > 1) {
    bool moved = false;
    for (const StateEdge& e : sg.edges) {
      int other = e.from == cur ? e.to : (e.to == cur ? e.from : -1);
      if (other < 0 || sg.level[other] != sg.level[cur] - 1) continue;
      r.word.push_back(e.gen);
      cur = other;
      r.trace.push_back(sg.states[cur]);
      moved = true;
      break;
    }
    if (!moved) return not_in_orbit(sg.states[cur], "no downward edge in BFS graph");
  }
  std::reverse(r.word.begin(), r.word.end());
  return r;
}

}  // namespace

DescentResult descend(const Graph& graph, const OrbitState& state) {
  auto slots = slots_at(graph, state.vertex);
  OrbitState s = state;
  s.canonicalize();
  if (s.slots.size() < slots.size()) s.slots.resize(slots.size());

  if (slots.size() <= 2) return membership_by_bfs(graph, s);

  if (auto problems = state_invariant_violations(graph, s); !problems.empty()) {
    std::string reason;
    for (const auto& p : problems) reason += (reason.empty() ? "" : "; ") + p;
    return not_in_orbit(s, reason);
  }

  DescentResult r;
  r.trace.push_back(s);
  Word applied;  // generators in application order
  OrbitState target = initial_state(graph, state.vertex);
  while (!(s == target)) {
    // Find the first slot with a maximal entry that can move toward the center.
    Generator move = SimpleRootId::central(state.vertex);
    bool found = false;
    for (size_t u = 0; u < slots.size() && !found; ++u) {
      const auto& seq = s.slots[u];
      if (seq.empty()) continue;
      Int mx = *std::max_element(seq.begin(), seq.end());
      for (size_t j = 1; j < seq.size(); ++j) {
        if (seq[j] == mx && seq[j] > seq[j - 1]) {
          move = SimpleRootId::leg(slots[u].edge, slots[u].sign, static_cast<long long>(j));
          found = true;
          break;
        }
      }
    }
    OrbitState next = apply_generator(graph, move, s);
    if (!found) {
      // Central step: must strictly lower a_v and keep all entries nonnegative.
      bool negative = next.a_v < 1;
      for (const auto& seq : next.slots)
        for (const Int& x : seq)
          if (x < 0) negative = true;
      if (negative) return not_in_orbit(next, "central reflection produced a negative entry");
      if (next.a_v >= s.a_v)
        return not_in_orbit(next, "central reflection does not decrease a_v");
    }
    s = next;
    applied.push_back(move);
    r.trace.push_back(s);
  }
  r.in_orbit = true;
  r.word.assign(applied.rbegin(), applied.rend());
  return r;
}

DescentResult membership(const Graph& graph, const OrbitState& candidate) {
  OrbitState s = candidate;
  s.canonicalize();
  auto slots = slots_at(graph, s.vertex);
  if (s.slots.size() > slots.size())
    return not_in_orbit(s, "more slot sequences than incidence slots");
  s.slots.resize(slots.size());
  DescentResult r = descend(graph, s);
  if (r.in_orbit) std::reverse(r.word.begin(), r.word.end());  // now maps eps_v to the state
  return r;
}

Word xreduced_word(const Graph& graph, const OrbitState& state) {
  DescentResult r = membership(graph, state);
  if (!r.in_orbit)
    throw NotInOrbitError("state is not in the orbit: " + r.reason);
  return r.word;
}

nlohmann::json state_to_json(const OrbitState& state) {
  nlohmann::json j;
  j["vertex"] = state.vertex;
  j["a_v"] = state.a_v.convert_to<long long>();
  j["slots"] = nlohmann::json::array();
  for (const auto& seq : state.slots) {
    nlohmann::json s = nlohmann::json::array();
    for (const Int& x : seq) s.push_back(x.convert_to<long long>());
    j["slots"].push_back(s);
  }
  return j;
}

OrbitState state_from_json(const nlohmann::json& j) {
  OrbitState s;
  s.vertex = j.at("vertex").get<std::string>();
  s.a_v = j.at("a_v").get<long long>();
  for (const auto& seq : j.at("slots")) {
    std::vector<Int> entries;
    for (const auto& x : seq) entries.push_back(Int(x.get<long long>()));
    s.slots.push_back(std::move(entries));
  }
  s.canonicalize();
  return s;
}

nlohmann::json state_graph_to_json(const StateGraph& sg) {
  nlohmann::json j;
  j["states"] = nlohmann::json::array();
  for (size_t i = 0; i < sg.states.size(); ++i) {
    nlohmann::json s;
    s["level"] = sg.level[i];
    s["state"] = state_to_json(sg.states[i]);
    j["states"].push_back(s);
  }
  j["edges"] = nlohmann::json::array();
  for (const StateEdge& e : sg.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"generator", e.gen.key()}});
  return j;
}

}  // namespace kacweyl
