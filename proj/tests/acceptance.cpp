// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kacweyl/characters.hpp"
#include "kacweyl/oracle.hpp"
#include "kacweyl/tensor.hpp"

using namespace kacweyl;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

nlohmann::json load_json(const std::string& name) {
  std::ifstream in(std::string(KACWEYL_DATA_DIR) + "/" + name);
  if (!in.good()) throw std::runtime_error("cannot open data file " + name);
  return nlohmann::json::parse(in);
}

std::string run_cli(const std::string& args) {
  std::string command = std::string(KACWEYL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string output;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, n);
  int status = pclose(pipe);
  if (status != 0) output += "\n[exit status " + std::to_string(status) + "]";
  return output;
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

Graph star(int n) {
  Graph g;
  g.vertices.push_back("v");
  for (int k = 1; k <= n; ++k) g.edges.push_back({"t" + std::to_string(k), "v", ""});
  return g;
}

// 1. The CLI reproduces the worked 11-term denominator expansion verbatim.
Check criterion1() {
  Check c;
  std::string out =
      run_cli("denominator " + std::string(KACWEYL_DATA_DIR) +
              "/star3.json --cutoff 3 --style example55");
  c.require(out == kGoldenExample55, "CLI output differs from the golden text");
  return c;
}

// 2. The worked descent example: six reduced steps back to eps_v.
Check criterion2() {
  Check c;
  Graph g = graph_from_json(load_json("star3.json"));
  OrbitState s = state_from_json(load_json("descent_example.json"));
  DescentResult r = descend(g, s);
  c.require(r.in_orbit, "descent failed");
  c.require(r.word.size() == 6, "descent word length != 6");
  c.require(r.trace.size() == 7, "trace length != 7");
  c.require(is_reduced(g, r.word), "descent word is not reduced");
  Weight eps = state_to_weight(g, initial_state(g, "v"));
  c.require(act(g, r.word, state_to_weight(g, s)) == eps, "descent word does not reach eps_v");
  Word up = xreduced_word(g, s);
  c.require(act(g, up, eps) == state_to_weight(g, s), "X-reduced word does not rebuild the state");
  return c;
}

// 3. The invariant-satisfying non-member: all numeric conditions pass, yet
// the descent certifies non-membership.
Check criterion3() {
  Check c;
  Graph g = graph_from_json(load_json("star3.json"));
  OrbitState s = state_from_json(load_json("false_positive.json"));
  c.require(state_invariant_violations(g, s).empty(), "numeric invariants unexpectedly fail");
  DescentResult r = membership(g, s);
  c.require(!r.in_orbit, "membership unexpectedly succeeded");
  c.require(r.reason == "central reflection produced a negative entry",
            "unexpected rejection reason: " + r.reason);
  return c;
}

// 4. Matrix-group oracle vs orbit module on the truncated star N=3, M=4 up
// to length 8: bijection, levels, edge structure, inversion-root support.
Check criterion4() {
  Check c;
  OracleReport report = compare_with_orbit(TruncatedStar{3, 4}, 8);
  c.require(report.ok, report.mismatches.empty() ? "report not ok" : report.mismatches.front());
  c.require(report.xreduced_counts == report.orbit_counts, "count vectors differ");
  return c;
}

// 5. Exhaustive structural invariants to level 8 on the 3- and 4-leg stars.
Check criterion5() {
  Check c;
  for (int n : {3, 4}) {
    Graph g = star(n);
    StateGraph sg = bfs(g, "v", 8);
    for (size_t i = 0; i < sg.states.size() && c.ok; ++i) {
      const OrbitState& s = sg.states[i];
      c.require(state_invariant_violations(g, s).empty(), "numeric invariant fails in orbit");
      DescentResult r = membership(g, s);
      c.require(r.in_orbit, "BFS state rejected by membership");
      c.require(static_cast<int>(r.word.size()) == sg.level[i] - 1,
                "X-reduced word length != level - 1");
      for (const Weight& beta : inversion_roots(g, r.word)) {
        c.require(beta.coeff(Coord::central("v")) != 0,
                  "inversion root without central support");
      }
      // Dot recursion on the word and its one-step truncation.
      if (!r.word.empty()) {
        Word head(r.word.begin(), r.word.end() - 1);
        c.require(dot_zero(g, r.word) ==
                      reflect(g, r.word.back(), dot_zero(g, head)) -
                          simple_root(g, r.word.back()),
                  "dot recursion fails");
      }
    }
    for (const StateEdge& e : sg.edges)
      c.require(sg.level[e.to] - sg.level[e.from] == 1, "state edge within one level");
  }
  return c;
}

// 6. Randomized reflection properties: involution, coroot formula against
// direct coefficient computation, braid and commutation relations.
Check criterion6() {
  Check c;
  std::mt19937 rng(2026);
  Graph g = star(3);
  std::vector<Generator> gens = {SimpleRootId::central("v")};
  for (const Slot& s : slots_at(g, "v"))
    for (int i = 1; i <= 3; ++i) gens.push_back(SimpleRootId::leg(s.edge, s.sign, i));
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  long long samples = 0;
  for (int trial = 0; trial < 1500 && c.ok; ++trial) {
    Weight w;
    w.set(Coord::central("v"), coef(rng));
    w.set(Coord::central_prime("v"), coef(rng));
    for (const Slot& s : slots_at(g, "v"))
      for (int i = 1; i <= 4; ++i) w.set(Coord::leg(s.edge, s.sign * i), coef(rng));
    for (const Generator& a : gens) {
      // involution
      c.require(reflect(g, a, reflect(g, a, w)) == w, "reflection is not an involution");
      // reflection formula: the image differs from w by <coroot, w> alpha
      Weight image = reflect(g, a, w);
      c.require(image == w - pair_coroot(g, w, a) * simple_root(g, a),
                "coroot formula violated");
      samples += 2;
    }
    const Generator& a = gens[pick(rng)];
    const Generator& b = gens[pick(rng)];
    Int cart_ab = pair_coroot(g, simple_root(g, b), a);
    Int cart_ba = pair_coroot(g, simple_root(g, a), b);
    if (a == b) continue;
    Weight ab = reflect(g, a, reflect(g, b, w));
    if (cart_ab == 0 && cart_ba == 0) {  // commuting pair
      c.require(ab == reflect(g, b, reflect(g, a, w)), "commuting pair fails");
      ++samples;
    } else if (cart_ab * cart_ba == 1) {  // braid order 3
      Weight cycled = w;
      for (int rep = 0; rep < 3; ++rep) cycled = reflect(g, a, reflect(g, b, cycled));
      c.require(cycled == w, "braid relation fails");
      ++samples;
    }
  }
  c.require(samples >= 10000, "fewer than 10^4 samples");
  return c;
}

// 7. Exterior/symmetric square dimension identities for n = 4, 5, 6.
Check criterion7() {
  Check c;
  for (long long n : {4, 5, 6}) {
    GlSqReport report = verify_gl_sq_decompositions(n);
    c.require(report.ok, "square dimensions differ at n=" + std::to_string(n));
  }
  return c;
}

// 8. Random dominant weights: every truncated character term carries a valid
// label and the term weights are pairwise distinct.
Check criterion8() {
  Check c;
  std::mt19937 rng(55);
  Graph g = graph_from_json(load_json("star3.json"));
  std::uniform_int_distribution<int> small(0, 3);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    Weight phi;
    for (const Slot& slot : slots_at(g, "v")) {
      // weakly increasing nonpositive chain toward zero
      int depth = small(rng);
      int value = -small(rng);
      for (int i = depth; i >= 1; --i) {
        if (value < 0) phi.set(Coord::leg(slot.edge, slot.sign * i), value);
        value -= small(rng);
      }
    }
    phi.set(Coord::central("v"), -small(rng));
    Int pairing = pair_coroot(g, phi, SimpleRootId::central("v"));
    if (pairing < 0) phi.set(Coord::central_prime("v"), -pairing + small(rng));
    if (!is_dominant(g, phi).ok) {
      c.require(false, "generated weight is not dominant");
      break;
    }
    try {
      CharacterExpansion exp = character_expansion(g, phi, 4);
      std::set<Weight> weights;
      for (const VermaTerm& term : exp.terms) {
        verma_label(g, term.weight);  // throws if not X-dominant
        weights.insert(term.weight);
      }
      c.require(weights.size() == exp.terms.size(), "term weights collide");
    } catch (const std::exception& err) {
      c.require(false, std::string("expansion failed: ") + err.what());
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* description;
    Check (*run)();
  };
  const Criterion criteria[] = {
      {"CLI reproduces the 11-term denominator expansion", criterion1},
      {"six-step descent of the worked example", criterion2},
      {"invariant-satisfying state outside the orbit", criterion3},
      {"matrix oracle matches the orbit module (N=3, M=4, length 8)", criterion4},
      {"exhaustive structural invariants to level 8 (N=3 and N=4)", criterion5},
      {"randomized reflection identities (>= 10^4 samples)", criterion6},
      {"square decomposition dimensions for n = 4, 5, 6", criterion7},
      {"random dominant characters: valid, distinct term labels", criterion8},
  };

  bool all_ok = true;
  for (size_t i = 0; i < std::size(criteria); ++i) {
    Check result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& err) {
      result.ok = false;
      result.detail = std::string("exception: ") + err.what();
    }
    all_ok = all_ok && result.ok;
    std::cout << "Criterion " << (i + 1) << ": " << (result.ok ? "PASS" : "FAIL") << " — "
              << criteria[i].description;
    if (!result.ok && !result.detail.empty()) std::cout << " (" << result.detail << ")";
    std::cout << std::endl;
  }
  return all_ok ? 0 : 1;
}
