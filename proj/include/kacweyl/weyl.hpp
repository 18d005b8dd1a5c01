#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <vector>

#include "kacweyl/weight.hpp"

namespace kacweyl {

using Generator = SimpleRootId;

// Sequence of simple reflections, leftmost applied last.
using Word = std::vector<Generator>;

// s_r(w) = w - <coroot_r, w> alpha_r.
Weight reflect(const Graph& graph, const Generator& g, const Weight& w);

// Right-to-left application of reflect.
Weight act(const Graph& graph, const Word& word, const Weight& w);

// Expands w over the simple roots. nullopt when w is not in the root lattice.
std::optional<std::map<SimpleRootId, Int>> root_in_simple_basis(const Graph& graph,
                                                                const Weight& w);

bool is_reduced(const Graph& graph, const Word& word);

// For reduced word s_{i_1}...s_{i_m}: beta_k = s_{i_m}...s_{i_{k+1}}(alpha_{i_k}).
// Throws NotReducedError when some beta_k fails positivity.
std::vector<Weight> inversion_roots(const Graph& graph, const Word& word);

// w.0 = -sum of inversion roots.
Weight dot_zero(const Graph& graph, const Word& word);

// Shifted action w.phi = w(phi) + w.0, with the letters of the word applied
// left-to-right (the order matching the suffix inversion-root convention).
Weight dot(const Graph& graph, const Word& word, const Weight& phi);

nlohmann::json word_to_json(const Word& word);
Word word_from_json(const nlohmann::json& j);
std::string word_to_string(const Word& word);

}  // namespace kacweyl
