#include "kacweyl/oracle.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "kacweyl/errors.hpp"

namespace kacweyl {

namespace {

struct GenInfo {
  bool central = false;
  int leg = 0;
  int i = 0;  // transposition of a_{i,k} and a_{i+1,k}
};

GenInfo decode(const TruncatedStar& trunc, int gen) {
  if (gen == 0) return {true, 0, 0};
  int g = gen - 1;
  return {false, g / trunc.M, g % trunc.M + 1};
}

}  // namespace

OracleMatrix identity_matrix(const TruncatedStar& trunc) {
  int d = trunc.dim();
  OracleMatrix m(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i) * d + i] = 1;
  return m;
}

int central_generator() { return 0; }

int leg_generator(const TruncatedStar& trunc, int leg, int i) {
  if (leg < 0 || leg >= trunc.N || i < 1 || i > trunc.M)
    throw std::invalid_argument("leg generator out of range");
  return 1 + leg * trunc.M + (i - 1);
}

void apply_generator(const TruncatedStar& trunc, int gen, std::vector<long long>& x) {
  GenInfo info = decode(trunc, gen);
  if (!info.central) {
    std::swap(x[trunc.coord(info.leg, info.i)], x[trunc.coord(info.leg, info.i + 1)]);
    return;
  }
  long long pairing = (2 - trunc.N) * x[0] + x[trunc.dim() - 1];
  for (int k = 0; k < trunc.N; ++k) pairing += x[trunc.coord(k, 1)];
  x[0] -= pairing;
  for (int k = 0; k < trunc.N; ++k) x[trunc.coord(k, 1)] -= pairing;
}

OracleMatrix left_multiply(const TruncatedStar& trunc, int gen, const OracleMatrix& m) {
  int d = trunc.dim();
  OracleMatrix out = m;
  GenInfo info = decode(trunc, gen);
  auto row = [&](OracleMatrix& mat, int r) { return mat.begin() + static_cast<long>(r) * d; };
  if (!info.central) {
    int a = trunc.coord(info.leg, info.i);
    int b = trunc.coord(info.leg, info.i + 1);
    std::swap_ranges(row(out, a), row(out, a) + d, row(out, b));
    return out;
  }
  // Central reflection: subtract the pairing row from a_v and each a_{1,k}.
  std::vector<std::int32_t> pairing(d, 0);
  for (int j = 0; j < d; ++j) {
    std::int32_t sum = static_cast<std::int32_t>(2 - trunc.N) * m[j] +
                       m[static_cast<std::size_t>(d - 1) * d + j];
    for (int k = 0; k < trunc.N; ++k) sum += m[static_cast<std::size_t>(trunc.coord(k, 1)) * d + j];
    pairing[j] = sum;
  }
  for (int j = 0; j < d; ++j) out[j] -= pairing[j];
  for (int k = 0; k < trunc.N; ++k) {
    int r = trunc.coord(k, 1);
    for (int j = 0; j < d; ++j) out[static_cast<std::size_t>(r) * d + j] -= pairing[j];
  }
  return out;
}

std::vector<int> Enumeration::word(int index) const {
  std::vector<int> out;
  for (int cur = index; cur > 0; cur = elements[cur].parent) out.push_back(elements[cur].gen);
  return out;
}

Enumeration enumerate(const TruncatedStar& trunc, int max_len, long long cap) {
  if (trunc.N < 3 || trunc.M < 1) throw std::invalid_argument("need N >= 3 and M >= 1");
  Enumeration en;
  en.trunc = trunc;
  auto [it, inserted] = en.seen.emplace(identity_matrix(trunc), 0);
  en.elements.push_back({0, 0, -1, -1, &it->first});
  en.counts.assign(1, 1);
  std::vector<int> frontier{0};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<int> next;
    for (int idx : frontier) {
      const OracleMatrix& m = *en.elements[idx].matrix;
      for (int gen = 0; gen < trunc.generator_count(); ++gen) {
        OracleMatrix prod = left_multiply(trunc, gen, m);
        auto [pit, fresh] = en.seen.emplace(std::move(prod), static_cast<int>(en.elements.size()));
        if (!fresh) continue;
        if (static_cast<long long>(en.elements.size()) >= cap)
          throw ResourceCapError("oracle element cap exceeded");
        next.push_back(static_cast<int>(en.elements.size()));
        en.elements.push_back({pit->second, len, idx, gen, &pit->first});
      }
    }
    en.counts.push_back(static_cast<long long>(next.size()));
    frontier = std::move(next);
  }
  return en;
}

std::vector<long long> matrix_column(const TruncatedStar& trunc, const OracleMatrix& m, int j) {
  int d = trunc.dim();
  std::vector<long long> col(d);
  for (int i = 0; i < d; ++i) col[i] = m[static_cast<std::size_t>(i) * d + j];
  return col;
}

bool is_positive_root_vector(const TruncatedStar& trunc, const std::vector<long long>& x) {
  if (x[trunc.dim() - 1] != 0)
    throw std::logic_error("root vector with nonzero a_v' component");
  // Simple-root expansion: c_v = x_v; on each leg the coefficient of
  // alpha_{i,k} is the suffix sum of the leg entries past depth i.
  if (x[0] < 0) return false;
  for (int k = 0; k < trunc.N; ++k) {
    long long suffix = 0;
    for (int i = trunc.M + 1; i >= 2; --i) {
      suffix += x[trunc.coord(k, i)];
      if (suffix < 0) return false;
    }
    if (suffix + x[trunc.coord(k, 1)] != x[0])
      throw std::logic_error("vector is not in the root lattice of the truncated star");
  }
  return true;
}

bool is_xreduced(const TruncatedStar& trunc, const OracleMatrix& m) {
  for (int k = 0; k < trunc.N; ++k)
    for (int i = 1; i <= trunc.M; ++i) {
      std::vector<long long> image = matrix_column(trunc, m, trunc.coord(k, i + 1));
      std::vector<long long> lower = matrix_column(trunc, m, trunc.coord(k, i));
      for (int r = 0; r < trunc.dim(); ++r) image[r] -= lower[r];
      if (!is_positive_root_vector(trunc, image)) return false;
    }
  return true;
}

bool preserves_gram(const TruncatedStar& trunc, const OracleMatrix& m) {
  int d = trunc.dim();
  int d0 = d - 1;  // a_v' excluded
  auto gram = [&](int r) { return r == 0 ? -(trunc.N - 2) : 1; };
  for (int i = 0; i < d0; ++i)
    for (int j = i; j < d0; ++j) {
      long long sum = 0;
      for (int r = 0; r < d0; ++r)
        sum += static_cast<long long>(gram(r)) * m[static_cast<std::size_t>(r) * d + i] *
               m[static_cast<std::size_t>(r) * d + j];
      long long expected = i == j ? gram(i) : 0;
      if (sum != expected) return false;
    }
  return true;
}

std::vector<std::vector<long long>> inversion_root_vectors(const TruncatedStar& trunc,
                                                           const std::vector<int>& word) {
  int d = trunc.dim();
  std::vector<std::vector<long long>> roots;
  for (std::size_t k = 0; k < word.size(); ++k) {
    GenInfo info = decode(trunc, word[k]);
    std::vector<long long> alpha(d, 0);
    if (info.central) {
      alpha[0] = 1;
      for (int leg = 0; leg < trunc.N; ++leg) alpha[trunc.coord(leg, 1)] = 1;
    } else {
      alpha[trunc.coord(info.leg, info.i + 1)] = 1;
      alpha[trunc.coord(info.leg, info.i)] = -1;
    }
    for (std::size_t j = k + 1; j < word.size(); ++j) apply_generator(trunc, word[j], alpha);
    roots.push_back(std::move(alpha));
  }
  return roots;
}

Graph truncated_star_graph(const TruncatedStar& trunc) {
  Graph g;
  g.vertices.push_back("v");
  for (int k = 1; k <= trunc.N; ++k) {
    std::ostringstream id;
    id << "leg" << (k < 10 ? "0" : "") << k;
    g.edges.push_back({id.str(), "", "v"});
  }
  return g;
}

OrbitState state_from_vector(const TruncatedStar& trunc, const Graph& graph,
                             const std::vector<long long>& x) {
  OrbitState state;
  state.vertex = graph.vertices.front();
  state.a_v = x[0];
  for (int k = 0; k < trunc.N; ++k) {
    std::vector<Int> leg;
    for (int i = 1; i <= trunc.M + 1; ++i) leg.push_back(x[trunc.coord(k, i)]);
    state.slots.push_back(std::move(leg));
  }
  state.canonicalize();
  return state;
}

OracleReport compare_with_orbit(const TruncatedStar& trunc, int max_len) {
  OracleReport report;
  report.max_len = max_len;
  Graph graph = truncated_star_graph(trunc);
  StateGraph sg = bfs(graph, "v", max_len + 1, trunc.M + 1);
  Enumeration en = enumerate(trunc, max_len);
  report.total_elements = static_cast<long long>(en.elements.size());
  report.xreduced_counts.assign(max_len + 1, 0);
  report.orbit_counts.assign(max_len + 1, 0);
  for (std::size_t i = 0; i < sg.states.size(); ++i)
    if (sg.level[i] - 1 <= max_len) ++report.orbit_counts[sg.level[i] - 1];

  std::map<OrbitState, int> image_length;
  for (const GroupElement& el : en.elements) {
    if (!is_xreduced(trunc, *el.matrix)) continue;
    ++report.xreduced_counts[el.length];
    std::vector<long long> image = matrix_column(trunc, *el.matrix, 0);
    OrbitState state = state_from_vector(trunc, graph, image);

    auto [it, fresh] = image_length.emplace(state, el.length);
    if (!fresh)
      report.mismatches.push_back("two X-reduced elements share the image at length " +
                                  std::to_string(el.length));
    // (ii) the orbit module must hold this state exactly at level length+1.
    int found = sg.find(state);
    if (found < 0)
      report.mismatches.push_back("X-reduced image missing from orbit BFS at length " +
                                  std::to_string(el.length));
    else if (sg.level[found] != el.length + 1)
      report.mismatches.push_back("level " + std::to_string(sg.level[found]) +
                                  " != length+1 at length " + std::to_string(el.length));

    // (iii) no generator connects two states of the same level.
    for (int gen = 0; gen < trunc.generator_count(); ++gen) {
      std::vector<long long> moved = image;
      apply_generator(trunc, gen, moved);
      if (moved == image) continue;
      OrbitState neighbor = state_from_vector(trunc, graph, moved);
      int nidx = sg.find(neighbor);
      if (nidx >= 0 && found >= 0 && sg.level[nidx] == sg.level[found])
        report.mismatches.push_back("same-level state edge at length " +
                                    std::to_string(el.length));
    }

    // (iv) every inversion root is positive and meets the central node.
    std::vector<int> word = en.word(el.index);
    for (const auto& root : inversion_root_vectors(trunc, word)) {
      if (!is_positive_root_vector(trunc, root))
        report.mismatches.push_back("non-positive inversion root at length " +
                                    std::to_string(el.length));
      if (root[0] == 0)
        report.mismatches.push_back("inversion root with no central support at length " +
                                    std::to_string(el.length));
    }
  }

  // (i) counts: X-reduced per length vs orbit states per level.
  for (int l = 0; l <= max_len; ++l)
    if (report.xreduced_counts[l] != report.orbit_counts[l])
      report.mismatches.push_back("count mismatch at length " + std::to_string(l) + ": " +
                                  std::to_string(report.xreduced_counts[l]) + " X-reduced vs " +
                                  std::to_string(report.orbit_counts[l]) + " orbit states");
  report.ok = report.mismatches.empty();
  return report;
}

nlohmann::json oracle_report_to_json(const OracleReport& report) {
  return nlohmann::json{{"ok", report.ok},
                        {"max_len", report.max_len},
                        {"xreduced_counts", report.xreduced_counts},
                        {"orbit_counts", report.orbit_counts},
                        {"total_elements", report.total_elements},
                        {"mismatches", report.mismatches}};
}

}  // namespace kacweyl
