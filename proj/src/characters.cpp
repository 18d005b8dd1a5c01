#include "kacweyl/characters.hpp"

#include <algorithm>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "kacweyl/errors.hpp"

namespace kacweyl {

namespace {

// Deepest index with a nonzero coefficient on the given side of an edge.
long long chain_depth(const Weight& phi, const std::string& edge, int sign) {
  long long depth = 0;
  for (const auto& [coord, value] : phi.coeffs()) {
    if (coord.kind != Coord::Kind::Leg || coord.id != edge) continue;
    if (sign > 0 ? coord.index > 0 : coord.index < 0)
      depth = std::max(depth, sign > 0 ? coord.index : -coord.index);
  }
  return depth;
}

nlohmann::json int_to_json(const Int& value) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (value < lo || value > hi) return value.str();
  return value.convert_to<long long>();
}

}  // namespace

DominanceReport is_dominant(const Graph& graph, const Weight& phi) {
  DominanceReport report;
  // Chain condition on every edge side: coefficients weakly increase with
  // depth and vanish eventually, hence are nonpositive.
  for (const Edge& e : graph.edges) {
    for (int sign : {-1, +1}) {
      long long depth = chain_depth(phi, e.id, sign);
      for (long long i = 1; i <= depth; ++i) {
        Int here = phi.coeff(Coord::leg(e.id, sign * i));
        Int next = i < depth ? phi.coeff(Coord::leg(e.id, sign * (i + 1))) : Int(0);
        if (here > next) {
          std::ostringstream msg;
          msg << "chain " << e.id << (sign > 0 ? ":+" : ":-") << " fails at depth " << i
              << ": " << here << " > " << next;
          report.violations.push_back(msg.str());
        }
      }
    }
  }
  // Central condition at every vertex: <phi, alpha_v^vee> >= 0 for the
  // extended coroot.
  for (const std::string& v : graph.vertices) {
    Int pairing = pair_coroot(graph, phi, SimpleRootId::central(v));
    if (pairing < 0) {
      std::ostringstream msg;
      msg << "central pairing at " << v << " is " << pairing << " < 0";
      report.violations.push_back(msg.str());
    }
  }
  report.ok = report.violations.empty();
  return report;
}

VermaLabel verma_label(const Graph& graph, const Weight& phi) {
  VermaLabel label;
  for (const Edge& e : graph.edges) {
    auto side = [&](int sign) {
      std::vector<long long> parts;
      long long depth = chain_depth(phi, e.id, sign);
      for (long long i = 1; i <= depth; ++i) {
        Int part = -phi.coeff(Coord::leg(e.id, sign * i));
        static const Int hi = std::numeric_limits<long long>::max();
        if (part < 0 || part > hi)
          throw NotXDominantError("edge " + e.id + ": chain entry " + part.str() +
                                  " is not a partition part");
        parts.push_back(part.convert_to<long long>());
      }
      return parts;
    };
    std::vector<long long> lambda = side(-1);
    std::vector<long long> mu = side(+1);
    try {
      label.edge_labels.emplace(e.id, Bipartition(lambda, mu));
    } catch (const std::invalid_argument& err) {
      throw NotXDominantError("edge " + e.id + ": " + err.what());
    }
  }
  for (const std::string& v : graph.vertices)
    label.grading.emplace(
        v, std::make_pair(phi.coeff(Coord::central(v)), phi.coeff(Coord::central_prime(v))));
  return label;
}

Word WordTuple::concatenated(const Graph& graph) const {
  Word out;
  for (const std::string& v : graph.vertices) {
    auto it = words.find(v);
    if (it == words.end()) continue;
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

std::vector<WordTuple> xreduced_tuples(const Graph& graph, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  // Per vertex, all X-reduced words of length <= cutoff, by length then by
  // the orbit-state order within a length.
  std::vector<std::vector<Word>> words_per_vertex;
  for (const std::string& v : graph.vertices) {
    StateGraph sg = bfs(graph, v, cutoff + 1);
    std::vector<Word> words;
    for (const OrbitState& s : sg.states) words.push_back(xreduced_word(graph, s));
    words_per_vertex.push_back(std::move(words));
  }
  std::vector<WordTuple> tuples;
  WordTuple current;
  auto extend = [&](auto&& self, std::size_t vi) -> void {
    if (vi == graph.vertices.size()) {
      tuples.push_back(current);
      return;
    }
    for (const Word& w : words_per_vertex[vi]) {
      long long len = static_cast<long long>(w.size());
      if (current.total_length + len > cutoff) continue;
      current.words[graph.vertices[vi]] = w;
      current.total_length += len;
      self(self, vi + 1);
      current.total_length -= len;
      current.words.erase(graph.vertices[vi]);
    }
  };
  extend(extend, 0);
  return tuples;
}

CharacterExpansion character_expansion(const Graph& graph, const Weight& phi, int cutoff) {
  DominanceReport report = is_dominant(graph, phi);
  if (!report.ok)
    throw std::invalid_argument("weight is not dominant: " + report.violations.front());
  CharacterExpansion expansion;
  expansion.phi = phi;
  expansion.cutoff = cutoff;
  for (const WordTuple& tuple : xreduced_tuples(graph, cutoff)) {
    VermaTerm term;
    term.length = tuple.total_length;
    term.sign = tuple.total_length % 2 == 0 ? +1 : -1;
    term.weight = dot(graph, tuple.concatenated(graph), phi);
    term.label = verma_label(graph, term.weight);
    expansion.terms.push_back(std::move(term));
  }
  std::stable_sort(expansion.terms.begin(), expansion.terms.end(),
                   [](const VermaTerm& a, const VermaTerm& b) {
                     if (a.length != b.length) return a.length < b.length;
                     return a.weight < b.weight;
                   });
  return expansion;
}

CharacterExpansion denominator_expansion(const Graph& graph, int cutoff) {
  return character_expansion(graph, Weight{}, cutoff);
}

namespace {

std::string star_tuple(const Graph& graph, const Weight& w, bool include_prime) {
  std::ostringstream out;
  bool first_vertex = true;
  for (const std::string& v : graph.vertices) {
    if (!first_vertex) out << " | ";
    first_vertex = false;
    out << "(" << w.coeff(Coord::central(v));
    if (include_prime) out << "," << w.coeff(Coord::central_prime(v));
    for (const Slot& slot : slots_at(graph, v)) {
      out << "; ";
      long long depth = chain_depth(w, slot.edge, slot.sign);
      if (depth == 0) {
        out << "0";
        continue;
      }
      for (long long i = 1; i <= depth; ++i) {
        if (i > 1) out << ",";
        out << w.coeff(Coord::leg(slot.edge, slot.sign * i));
      }
    }
    out << ")";
  }
  return out.str();
}

}  // namespace

std::string example55_style(const Graph& graph, const CharacterExpansion& expansion,
                            bool denominator, bool include_prime) {
  std::ostringstream out;
  if (denominator)
    out << "1/ch(M(0)) =\n";
  else
    out << "ch(L" << star_tuple(graph, expansion.phi, include_prime) << ") =\n";
  const char* module = denominator ? "L" : "M";
  for (const VermaTerm& term : expansion.terms) {
    out << "  " << (term.sign > 0 ? "+" : "-") << " ch(" << module
        << star_tuple(graph, term.weight, include_prime) << ")\n";
  }
  return out.str();
}

nlohmann::json expansion_to_json(const CharacterExpansion& expansion) {
  nlohmann::json j = nlohmann::json::array();
  for (const VermaTerm& term : expansion.terms) {
    nlohmann::json jt;
    jt["sign"] = term.sign;
    jt["length"] = term.length;
    jt["weight"] = weight_to_json(term.weight);
    jt["labels"] = nlohmann::json::object();
    for (const auto& [edge, bp] : term.label.edge_labels)
      jt["labels"][edge] = bipartition_to_json(bp);
    jt["grading"] = nlohmann::json::object();
    for (const auto& [vertex, grading] : term.label.grading)
      jt["grading"][vertex] =
          nlohmann::json::array({int_to_json(grading.first), int_to_json(grading.second)});
    j.push_back(std::move(jt));
  }
  return j;
}

}  // namespace kacweyl
