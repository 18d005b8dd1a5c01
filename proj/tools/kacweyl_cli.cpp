#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "kacweyl/characters.hpp"
#include "kacweyl/errors.hpp"
#include "kacweyl/oracle.hpp"
#include "kacweyl/orbit.hpp"
#include "kacweyl/tensor.hpp"

namespace {

using namespace kacweyl;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

Graph load_valid_graph(const std::string& path) {
  Graph g = load_graph(path);
  auto problems = validate(g);
  if (!problems.empty()) {
    std::string msg = "invalid graph:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw std::invalid_argument(msg);
  }
  return g;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string state_brief(const OrbitState& s) { return state_to_json(s).dump(); }

int run_validate(const std::string& graph_path) {
  Graph g = load_graph(graph_path);
  auto problems = validate(g);
  if (problems.empty()) {
    std::cout << "OK\n";
    return 0;
  }
  for (const auto& p : problems) std::cout << p << "\n";
  return 1;
}

int run_orbit(const std::string& graph_path, const std::string& vertex, int max_level,
              bool as_json) {
  Graph g = load_valid_graph(graph_path);
  StateGraph sg = bfs(g, vertex, max_level);
  if (as_json) {
    print_json(state_graph_to_json(sg));
    return 0;
  }
  for (int lvl = 1; lvl <= max_level; ++lvl) {
    auto idx = sg.states_at_level(lvl);
    if (idx.empty()) break;
    std::cout << "level " << lvl << " (" << idx.size() << "):\n";
    for (int i : idx) std::cout << "  " << state_brief(sg.states[i]) << "\n";
  }
  return 0;
}

int run_descend(const std::string& graph_path, const std::string& state_path, bool member_only) {
  Graph g = load_valid_graph(graph_path);
  OrbitState state = state_from_json(load_json(state_path));
  DescentResult result = member_only ? membership(g, state) : descend(g, state);
  if (!result.in_orbit) {
    std::cout << "NotInOrbit\n";
    std::cout << "reason: " << result.reason << "\n";
    std::cout << "witness: " << state_brief(result.witness) << "\n";
    return 0;
  }
  std::cout << "InOrbit\n";
  std::cout << "word: " << word_to_string(result.word) << "\n";
  std::cout << "length: " << result.word.size() << "\n";
  if (!member_only) {
    std::cout << "trace:\n";
    for (const OrbitState& s : result.trace) std::cout << "  " << state_brief(s) << "\n";
  }
  return 0;
}

int run_word(const std::string& graph_path, const std::string& state_path) {
  Graph g = load_valid_graph(graph_path);
  OrbitState state = state_from_json(load_json(state_path));
  Word w = xreduced_word(g, state);
  std::cout << word_to_string(w) << "\n";
  return 0;
}

int run_character(const std::string& graph_path, const std::string& phi_path, int cutoff) {
  Graph g = load_valid_graph(graph_path);
  Weight phi = weight_from_json(load_json(phi_path));
  print_json(expansion_to_json(character_expansion(g, phi, cutoff)));
  return 0;
}

int run_denominator(const std::string& graph_path, int cutoff, const std::string& style) {
  Graph g = load_valid_graph(graph_path);
  CharacterExpansion expansion = denominator_expansion(g, cutoff);
  if (style == "example55") {
    std::cout << example55_style(g, expansion, /*denominator=*/true);
  } else if (style.empty() || style == "json") {
    print_json(expansion_to_json(expansion));
  } else {
    throw std::invalid_argument("unknown style: " + style);
  }
  return 0;
}

int run_tensor(const std::string& graph_path, bool serre, const std::string& degree_vertex) {
  Graph g = load_valid_graph(graph_path);
  if (!degree_vertex.empty()) {
    FormalSum sum;
    sum.add(degree_component(g, degree_vertex));
    sum.normalize();
    print_json(formal_sum_to_json(sum));
    return 0;
  }
  (void)serre;  // default output
  print_json(formal_sum_to_json(serre_generators(g)));
  return 0;
}

int run_center(const std::string& graph_path) {
  Graph g = load_valid_graph(graph_path);
  print_json(center_maps_to_json(center_generators(g)));
  return 0;
}

// Exhaustive structural invariants on star graphs up to the given level.
int run_invariant_suite(int max_level) {
  int failures = 0;
  for (int N : {3, 4}) {
    TruncatedStar trunc{N, max_level};
    Graph g = truncated_star_graph(trunc);
    StateGraph sg = bfs(g, "v", max_level);
    long long checked = 0;
    for (std::size_t i = 0; i < sg.states.size(); ++i) {
      const OrbitState& s = sg.states[i];
      ++checked;
      auto bad = state_invariant_violations(g, s);
      for (const auto& msg : bad) {
        std::cerr << "state invariant violation: " << msg << "\n";
        ++failures;
      }
      DescentResult d = descend(g, s);
      if (!d.in_orbit || static_cast<int>(d.word.size()) != sg.level[i] - 1) {
        std::cerr << "descent length violation at level " << sg.level[i] << "\n";
        ++failures;
      }
    }
    for (const StateEdge& e : sg.edges)
      if (sg.level[e.from] == sg.level[e.to]) {
        std::cerr << "level structure violation: same-level edge\n";
        ++failures;
      }
    std::cout << "invariants N=" << N << ": " << checked << " states checked\n";
  }
  return failures;
}

int run_verify(const std::vector<int>& oracle_args, int invariants_level, int gl_dims_nmax) {
  bool all_ok = true;
  if (!oracle_args.empty()) {
    TruncatedStar trunc{oracle_args[0], oracle_args[1]};
    OracleReport report = compare_with_orbit(trunc, oracle_args[2]);
    print_json(oracle_report_to_json(report));
    all_ok = all_ok && report.ok;
  }
  if (invariants_level > 0) all_ok = all_ok && run_invariant_suite(invariants_level) == 0;
  if (gl_dims_nmax >= 4) {
    for (long long n = 4; n <= gl_dims_nmax; ++n) {
      GlSqReport report = verify_gl_sq_decompositions(n);
      std::cout << "n=" << n << ": Lambda^2 " << report.lambda2_sum << "/"
                << report.lambda2_expected << ", S^2 " << report.sym2_sum << "/"
                << report.sym2_expected << (report.ok ? " ok" : " MISMATCH") << "\n";
      all_ok = all_ok && report.ok;
    }
  }
  std::cout << (all_ok ? "verify: PASS" : "verify: FAIL") << "\n";
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl-orbit, character and tensor computations on decorated graphs"};
  app.require_subcommand(1);

  std::string graph_path, vertex, state_path, phi_path, style, degree_vertex;
  int max_level = 5, cutoff = 0, invariants_level = 0, gl_dims_nmax = 0;
  bool as_json = false, serre = false;
  std::vector<int> oracle_args;

  auto* validate_cmd = app.add_subcommand("validate", "check a graph file");
  validate_cmd->add_option("graph", graph_path)->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "BFS of the orbit of eps_v");
  orbit_cmd->add_option("graph", graph_path)->required();
  orbit_cmd->add_option("vertex", vertex)->required();
  orbit_cmd->add_option("--max-level", max_level)->required();
  orbit_cmd->add_flag("--json", as_json);

  auto* descend_cmd = app.add_subcommand("descend", "run the descent algorithm");
  descend_cmd->add_option("graph", graph_path)->required();
  descend_cmd->add_option("state", state_path)->required();

  auto* member_cmd = app.add_subcommand("member", "orbit membership decision");
  member_cmd->add_option("graph", graph_path)->required();
  member_cmd->add_option("state", state_path)->required();

  auto* word_cmd = app.add_subcommand("word", "X-reduced word of a state");
  word_cmd->add_option("graph", graph_path)->required();
  word_cmd->add_option("state", state_path)->required();

  auto* character_cmd = app.add_subcommand("character", "Kac-Weyl character expansion");
  character_cmd->add_option("graph", graph_path)->required();
  character_cmd->add_option("--phi", phi_path)->required();
  character_cmd->add_option("--cutoff", cutoff)->required();

  auto* denominator_cmd = app.add_subcommand("denominator", "denominator expansion");
  denominator_cmd->add_option("graph", graph_path)->required();
  denominator_cmd->add_option("--cutoff", cutoff)->required();
  denominator_cmd->add_option("--style", style);

  auto* tensor_cmd = app.add_subcommand("tensor", "Serre generators / degree components");
  tensor_cmd->add_option("graph", graph_path)->required();
  tensor_cmd->add_flag("--serre", serre);
  tensor_cmd->add_option("--degree", degree_vertex);

  auto* center_cmd = app.add_subcommand("center", "center generators");
  center_cmd->add_option("graph", graph_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "self-checks and the finite oracle");
  verify_cmd->add_option("--oracle", oracle_args, "N M LEN")->expected(3);
  verify_cmd->add_option("--invariants", invariants_level);
  verify_cmd->add_option("--gl-dims", gl_dims_nmax);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) return run_validate(graph_path);
    if (*orbit_cmd) return run_orbit(graph_path, vertex, max_level, as_json);
    if (*descend_cmd) return run_descend(graph_path, state_path, false);
    if (*member_cmd) return run_descend(graph_path, state_path, true);
    if (*word_cmd) return run_word(graph_path, state_path);
    if (*character_cmd) return run_character(graph_path, phi_path, cutoff);
    if (*denominator_cmd) return run_denominator(graph_path, cutoff, style);
    if (*tensor_cmd) return run_tensor(graph_path, serre, degree_vertex);
    if (*center_cmd) return run_center(graph_path);
    if (*verify_cmd) return run_verify(oracle_args, invariants_level, gl_dims_nmax);
  } catch (const std::logic_error& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
