#pragma once

#include <map>
#include <nlohmann/json_fwd.hpp>
#include <utility>

#include "kacweyl/bipartition.hpp"
#include "kacweyl/orbit.hpp"

namespace kacweyl {

struct DominanceReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// P_infinity^+ membership: nonpositive chain coefficients, weakly monotone
// chains toward zero, and the central condition at each vertex.
DominanceReport is_dominant(const Graph& graph, const Weight& phi);

struct VermaLabel {
  // lambda_j = -a_{-j,e} (source side), mu_j = -a_{j,e} (target side).
  std::map<std::string, Bipartition> edge_labels;
  // Per vertex: (a_v, a_v').
  std::map<std::string, std::pair<Int, Int>> grading;

  friend bool operator==(const VermaLabel&, const VermaLabel&) = default;
};

// Throws NotXDominantError when some chain is not weakly monotone nonpositive.
VermaLabel verma_label(const Graph& graph, const Weight& phi);

struct VermaTerm {
  int sign = +1;  // (-1)^{total length}
  Weight weight;
  VermaLabel label;
  long long length = 0;
};

struct CharacterExpansion {
  Weight phi;
  int cutoff = 0;
  std::vector<VermaTerm> terms;  // sorted by length, then by weight
};

// One word per vertex with total length bound; deterministic order.
struct WordTuple {
  std::map<std::string, Word> words;  // vertex -> X-reduced word
  long long total_length = 0;

  Word concatenated(const Graph& graph) const;  // vertices in graph order
};

std::vector<WordTuple> xreduced_tuples(const Graph& graph, int cutoff);

// Kac-Weyl character sum truncated at the given total word length.
CharacterExpansion character_expansion(const Graph& graph, const Weight& phi, int cutoff);

// Same term stream at phi = 0; terms read as simple-module labels.
CharacterExpansion denominator_expansion(const Graph& graph, int cutoff);

// Star-shaped display: one "(a_v; leg; leg; ...)" tuple per term, slot order
// from slots_at, active-side coefficients by increasing depth, a_v' omitted
// unless requested.
std::string example55_style(const Graph& graph, const CharacterExpansion& expansion,
                            bool denominator, bool include_prime = false);

nlohmann::json expansion_to_json(const CharacterExpansion& expansion);

}  // namespace kacweyl
