#include "kacweyl/weyl.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "kacweyl/errors.hpp"

namespace kacweyl {

Weight reflect(const Graph& graph, const Generator& g, const Weight& w) {
  Int pairing = pair_coroot(graph, w, g);
  if (pairing == 0) return w;
  Weight result = w;
  result -= pairing * simple_root(graph, g);
  return result;
}

Weight act(const Graph& graph, const Word& word, const Weight& w) {
  Weight result = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) result = reflect(graph, *it, result);
  return result;
}

std::optional<std::map<SimpleRootId, Int>> root_in_simple_basis(const Graph& graph,
                                                                const Weight& w) {
  std::map<SimpleRootId, Int> coeffs;
  Weight residual = w;
  // eps_v' occurs in no simple root.
  for (const auto& [c, x] : w.coeffs())
    if (c.kind == Coord::Kind::CentralPrime) return std::nullopt;
  // The central coefficient a_v fixes the alpha_v contribution.
  for (const auto& [c, x] : w.coeffs()) {
    if (c.kind != Coord::Kind::Central) continue;
    coeffs[SimpleRootId::central(c.id)] = x;
    residual -= x * simple_root(graph, SimpleRootId::central(c.id));
  }
  // What remains must telescope along each leg chain.
  std::map<std::pair<std::string, int>, std::map<long long, Int>> chains;
  for (const auto& [c, x] : residual.coeffs()) {
    if (c.kind != Coord::Kind::Leg) return std::nullopt;  // stray central residue
    int side = c.index > 0 ? +1 : -1;
    chains[{c.id, side}][c.index * side] = x;
  }
  for (const auto& [chain, entries] : chains) {
    long long depth = entries.rbegin()->first;
    Int partial = 0;
    for (long long i = 1; i <= depth; ++i) {
      auto it = entries.find(i);
      if (it != entries.end()) partial += it->second;
      if (i < depth && partial != 0)
        coeffs[SimpleRootId::leg(chain.first, chain.second, i)] = -partial;
    }
    if (partial != 0) return std::nullopt;
  }
  return coeffs;
}

namespace {

enum class RootSign { Positive, Negative, NotARoot };

RootSign classify(const Graph& graph, const Weight& w) {
  auto coeffs = root_in_simple_basis(graph, w);
  if (!coeffs) return RootSign::NotARoot;
  bool nonneg = true, nonpos = true;
  for (const auto& [r, c] : *coeffs) {
    if (c > 0) nonpos = false;
    if (c < 0) nonneg = false;
  }
  if (nonneg) return RootSign::Positive;
  if (nonpos) return RootSign::Negative;
  return RootSign::NotARoot;
}

// Shared by is_reduced and inversion_roots: computes all beta_k and whether
// each is positive.
std::pair<std::vector<Weight>, bool> inversion_roots_checked(const Graph& graph,
                                                             const Word& word) {
  std::vector<Weight> roots(word.size());
  bool all_positive = true;
  for (size_t k = 0; k < word.size(); ++k) {
    Weight beta = simple_root(graph, word[k]);
    // Apply s_{i_{k+1}}, ..., s_{i_m} in that order.
    for (size_t j = k + 1; j < word.size(); ++j) beta = reflect(graph, word[j], beta);
    if (classify(graph, beta) != RootSign::Positive) all_positive = false;
    roots[k] = std::move(beta);
  }
  return {std::move(roots), all_positive};
}

}  // namespace

bool is_reduced(const Graph& graph, const Word& word) {
  return inversion_roots_checked(graph, word).second;
}

std::vector<Weight> inversion_roots(const Graph& graph, const Word& word) {
  auto [roots, ok] = inversion_roots_checked(graph, word);
  if (!ok) throw NotReducedError("word is not reduced: " + word_to_string(word));
  return roots;
}

Weight dot_zero(const Graph& graph, const Word& word) {
  Weight sum;
  for (const Weight& beta : inversion_roots(graph, word)) sum += beta;
  return -sum;
}

Weight dot(const Graph& graph, const Word& word, const Weight& phi) {
  // The letters act left-to-right here, matching the suffix convention of the
  // inversion roots; only this pairing keeps dot a shifted action (appending a
  // letter t gives (w t).phi = t.(w.phi)) and sends dominant weights to
  // X-dominant ones under X-reduced words.
  Weight result = phi;
  for (const Generator& g : word) result = reflect(graph, g, result);
  result += dot_zero(graph, word);
  return result;
}

nlohmann::json word_to_json(const Word& word) {
  nlohmann::json j = nlohmann::json::array();
  for (const Generator& g : word) j.push_back(g.key());
  return j;
}

Word word_from_json(const nlohmann::json& j) {
  Word word;
  for (const auto& g : j) word.push_back(SimpleRootId::from_key(g.get<std::string>()));
  return word;
}

std::string word_to_string(const Word& word) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < word.size(); ++i) out << (i ? " " : "") << word[i].key();
  out << "]";
  return out.str();
}

}  // namespace kacweyl
