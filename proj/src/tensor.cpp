#include "kacweyl/tensor.hpp"

#include <algorithm>
#include <bit>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "kacweyl/errors.hpp"

namespace kacweyl {

namespace {

const Bipartition kV({1}, {});
const Bipartition kVStar({}, {1});
const Bipartition kAdj({1}, {1});

// Incidence sets at a vertex: outgoing, incoming and loop edges.
struct Incidence {
  std::vector<std::string> out;   // S_v
  std::vector<std::string> in;    // T_v
  std::vector<std::string> loop;  // L_v
};

Incidence incidence_at(const Graph& graph, const std::string& v) {
  Incidence inc;
  for (const Edge& e : graph.edges) {
    if (e.is_loop()) {
      if (e.source == v) inc.loop.push_back(e.id);
    } else {
      if (e.source == v) inc.out.push_back(e.id);
      if (e.target == v) inc.in.push_back(e.id);
    }
  }
  return inc;
}

void append_factor(TensorTerm& term, const std::string& edge, const Bipartition& b) {
  if (b.is_trivial()) return;
  term.factors[edge].push_back(b);
}

TensorTerm tensor_product(const TensorTerm& a, const TensorTerm& b) {
  TensorTerm out = a;
  for (const auto& [edge, labels] : b.factors)
    out.factors[edge].insert(out.factors[edge].end(), labels.begin(), labels.end());
  for (const auto& [vertex, d] : b.degree) out.degree[vertex] += d;
  out.mult = a.mult * b.mult;
  out.canonicalize();
  return out;
}

// One summand of Lambda^2 / S^2 of a single supported label: the labels it
// contributes on its edge slot (possibly none, the unit) and a multiplicity.
struct SquareOption {
  std::vector<Bipartition> labels;
  Int mult = 1;
};

std::vector<SquareOption> lambda2_options(const Bipartition& b) {
  if (b == kV) return {{{Bipartition({1, 1}, {})}, 1}};
  if (b == kVStar) return {{{Bipartition({}, {1, 1})}, 1}};
  if (b == kAdj)
    return {{{Bipartition({1, 1}, {2})}, 1},
            {{Bipartition({2}, {1, 1})}, 1},
            {{Bipartition({1}, {1})}, 2}};
  throw UnsupportedLabelError("unsupported factor label " + b.to_string());
}

std::vector<SquareOption> sym2_options(const Bipartition& b) {
  if (b == kV) return {{{Bipartition({2}, {})}, 1}};
  if (b == kVStar) return {{{Bipartition({}, {2})}, 1}};
  if (b == kAdj)
    return {{{Bipartition({2}, {2})}, 1},
            {{Bipartition({1, 1}, {1, 1})}, 1},
            {{Bipartition({1}, {1})}, 2},
            {{}, 2}};
  throw UnsupportedLabelError("unsupported factor label " + b.to_string());
}

// TL2/TS2 expansion of a single term of multiplicity one: odd subsets take
// the exterior square of their factors, even subsets the symmetric square.
void square_single(const TensorTerm& shape, FormalSum& lambda_out, FormalSum& sym_out) {
  std::vector<std::pair<std::string, Bipartition>> items;
  for (const auto& [edge, labels] : shape.factors)
    for (const Bipartition& b : labels) items.emplace_back(edge, b);
  if (items.size() > 20) throw ResourceCapError("too many tensor factors to square");

  std::map<std::string, long long> degree = shape.degree;
  for (auto& [vertex, d] : degree) d *= 2;

  for (std::size_t mask = 0; mask < (std::size_t(1) << items.size()); ++mask) {
    bool odd = std::popcount(mask) % 2 == 1;
    std::vector<TensorTerm> partial{TensorTerm{{}, degree, 1}};
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& [edge, label] = items[i];
      auto options = (mask >> i) & 1 ? lambda2_options(label) : sym2_options(label);
      std::vector<TensorTerm> next;
      for (const TensorTerm& t : partial)
        for (const SquareOption& opt : options) {
          TensorTerm grown = t;
          for (const Bipartition& b : opt.labels) grown.factors[edge].push_back(b);
          grown.mult *= opt.mult;
          next.push_back(std::move(grown));
        }
      partial = std::move(next);
    }
    FormalSum& bucket = odd ? lambda_out : sym_out;
    for (TensorTerm& t : partial) bucket.add(std::move(t));
  }
}

// Lambda^2 and S^2 of a multiplicity-merged sum share the cross terms
// T_k (x) T_l and differ only in the per-term squares.
std::pair<FormalSum, FormalSum> square_sum(const FormalSum& x) {
  FormalSum lam, sym;
  for (std::size_t k = 0; k < x.terms.size(); ++k) {
    TensorTerm shape = x.terms[k];
    Int m = shape.mult;
    shape.mult = 1;
    FormalSum lam_k, sym_k;
    square_single(shape, lam_k, sym_k);
    for (TensorTerm t : lam_k.terms) {
      t.mult *= m;
      lam.add(std::move(t));
    }
    for (TensorTerm t : sym_k.terms) {
      t.mult *= m;
      sym.add(std::move(t));
    }
    Int pairs = m * (m - 1) / 2;
    if (pairs > 0) {
      TensorTerm self = tensor_product(shape, shape);
      self.mult = pairs;
      lam.add(self);
      self.mult = pairs;
      sym.add(std::move(self));
    }
    for (std::size_t l = k + 1; l < x.terms.size(); ++l) {
      TensorTerm other = x.terms[l];
      Int ml = other.mult;
      other.mult = 1;
      TensorTerm cross = tensor_product(shape, other);
      cross.mult = m * ml;
      lam.add(cross);
      sym.add(std::move(cross));
    }
  }
  lam.normalize();
  sym.normalize();
  return {std::move(lam), std::move(sym)};
}

std::string degree_to_string(const std::map<std::string, long long>& degree) {
  if (degree.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [vertex, d] : degree) {
    if (d == 0) continue;
    if (!first) out << "+";
    first = false;
    if (d != 1) out << d;
    out << vertex;
  }
  return first ? "0" : out.str();
}

}  // namespace

void TensorTerm::canonicalize() {
  for (auto it = factors.begin(); it != factors.end();) {
    auto& labels = it->second;
    std::erase_if(labels, [](const Bipartition& b) { return b.is_trivial(); });
    std::sort(labels.begin(), labels.end());
    it = labels.empty() ? factors.erase(it) : std::next(it);
  }
  for (auto it = degree.begin(); it != degree.end();)
    it = it->second == 0 ? degree.erase(it) : std::next(it);
}

bool operator<(const TensorTerm& a, const TensorTerm& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.factors < b.factors;
}

std::string TensorTerm::to_string() const {
  std::ostringstream out;
  if (mult != 1) out << mult << "*";
  bool first = true;
  for (const auto& [edge, labels] : factors)
    for (const Bipartition& b : labels) {
      if (!first) out << "(x)";
      first = false;
      out << "L_{" << edge << "," << b.to_string() << "}";
    }
  if (first) out << "1";
  out << " @deg " << degree_to_string(degree);
  return out.str();
}

void FormalSum::add(TensorTerm term) {
  term.canonicalize();
  if (term.mult == 0) return;
  for (TensorTerm& existing : terms)
    if (same_shape(existing, term)) {
      existing.mult += term.mult;
      return;
    }
  terms.push_back(std::move(term));
}

void FormalSum::normalize() {
  std::erase_if(terms, [](const TensorTerm& t) { return t.mult == 0; });
  std::sort(terms.begin(), terms.end());
}

std::string FormalSum::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << " + ";
    out << terms[i].to_string();
  }
  return out.str();
}

TensorTerm degree_component(const Graph& graph, const std::string& v) {
  if (!graph.has_vertex(v)) throw std::invalid_argument("unknown vertex: " + v);
  Incidence inc = incidence_at(graph, v);
  TensorTerm term;
  for (const std::string& e : inc.out) append_factor(term, e, kVStar);
  for (const std::string& e : inc.in) append_factor(term, e, kV);
  for (const std::string& e : inc.loop) append_factor(term, e, kAdj);
  term.degree[v] = 1;
  term.canonicalize();
  return term;
}

TensorTerm dualize(const TensorTerm& term) {
  TensorTerm dual = term;
  for (auto& [edge, labels] : dual.factors)
    for (Bipartition& b : labels) std::swap(b.lambda, b.mu);
  for (auto& [vertex, d] : dual.degree) d = -d;
  dual.canonicalize();
  return dual;
}

FormalSum serre_generators(const Graph& graph) {
  FormalSum sum;
  for (const std::string& v : graph.vertices) {
    Incidence inc = incidence_at(graph, v);
    // Shared bulk of families a)-d): highest-weight squares on the slots
    // other than the distinguished edge.
    auto bulk = [&](const std::string& skip) {
      TensorTerm term;
      for (const std::string& i : inc.out)
        if (i != skip) append_factor(term, i, Bipartition({}, {2}));
      for (const std::string& i : inc.in)
        if (i != skip) append_factor(term, i, Bipartition({2}, {}));
      for (const std::string& i : inc.loop)
        if (i != skip) append_factor(term, i, Bipartition({2}, {2}));
      term.degree[v] = 2;
      return term;
    };
    for (const std::string& e : inc.in) {  // a)
      TensorTerm term = bulk(e);
      append_factor(term, e, Bipartition({1, 1}, {}));
      sum.add(std::move(term));
    }
    for (const std::string& e : inc.out) {  // b)
      TensorTerm term = bulk(e);
      append_factor(term, e, Bipartition({}, {1, 1}));
      sum.add(std::move(term));
    }
    for (const std::string& e : inc.loop) {  // c) and d)
      TensorTerm term = bulk(e);
      append_factor(term, e, Bipartition({2}, {1, 1}));
      sum.add(term);
      term.factors[e] = {Bipartition({1, 1}, {2})};
      sum.add(std::move(term));
    }
  }
  for (const Edge& e : graph.edges) {  // e)
    if (e.is_loop() || e.source.empty() || e.target.empty()) continue;
    TensorTerm term;
    append_factor(term, e.id, kAdj);
    for (const std::string& v : {e.source, e.target}) {
      Incidence inc = incidence_at(graph, v);
      for (const std::string& i : inc.out)
        if (i != e.id) append_factor(term, i, kVStar);
      for (const std::string& i : inc.in)
        if (i != e.id) append_factor(term, i, kV);
      for (const std::string& i : inc.loop) append_factor(term, i, kAdj);
    }
    term.degree[e.source] += 1;
    term.degree[e.target] += 1;
    sum.add(std::move(term));
  }
  auto adjacent = [&](const std::string& v, const std::string& w) {
    for (const Edge& e : graph.edges)
      if ((e.source == v && e.target == w) || (e.source == w && e.target == v)) return true;
    return false;
  };
  for (std::size_t a = 0; a < graph.vertices.size(); ++a)  // f)
    for (std::size_t b = a + 1; b < graph.vertices.size(); ++b) {
      const std::string& v = graph.vertices[a];
      const std::string& w = graph.vertices[b];
      if (adjacent(v, w)) continue;
      TensorTerm term;
      for (const std::string& u : {v, w}) {
        Incidence inc = incidence_at(graph, u);
        for (const std::string& i : inc.out) append_factor(term, i, kVStar);
        for (const std::string& i : inc.in) append_factor(term, i, kV);
        for (const std::string& i : inc.loop) append_factor(term, i, kAdj);
      }
      term.degree[v] += 1;
      term.degree[w] += 1;
      sum.add(std::move(term));
    }
  sum.normalize();
  return sum;
}

std::string CenterMap::to_string() const {
  switch (kind) {
    case Kind::Edge:
      return "(1, coev, -1) on edge " + id;
    case Kind::Loop:
      return "coev on loop " + id;
    case Kind::VertexPrime:
      return "1' at vertex " + id;
  }
  return "";
}

std::vector<CenterMap> center_generators(const Graph& graph) {
  std::vector<CenterMap> maps;
  for (const Edge& e : graph.edges)
    maps.push_back({e.is_loop() ? CenterMap::Kind::Loop : CenterMap::Kind::Edge, e.id});
  for (const std::string& v : graph.vertices)
    maps.push_back({CenterMap::Kind::VertexPrime, v});
  return maps;
}

FormalSum lambda2(const FormalSum& x) { return square_sum(x).first; }

FormalSum sym2(const FormalSum& x) { return square_sum(x).second; }

Int gl_dim(long long n, const Bipartition& b) {
  if (n <= 0) throw std::invalid_argument("gl_dim requires n >= 1");
  if (static_cast<long long>(b.lambda.size() + b.mu.size()) > n)
    throw std::invalid_argument("gl_dim: len(lambda) + len(mu) > n for " + b.to_string());
  std::vector<long long> w(n, 0);
  for (std::size_t i = 0; i < b.lambda.size(); ++i) w[i] = b.lambda[i];
  for (std::size_t i = 0; i < b.mu.size(); ++i) w[n - 1 - i] = -b.mu[i];
  Int num = 1, den = 1;
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j) {
      num *= w[i] - w[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

Int formal_sum_dim(long long n, const FormalSum& x) {
  Int total = 0;
  for (const TensorTerm& t : x.terms) {
    Int d = t.mult;
    for (const auto& [edge, labels] : t.factors)
      for (const Bipartition& b : labels) d *= gl_dim(n, b);
    total += d;
  }
  return total;
}

GlSqReport verify_gl_sq_decompositions(long long n) {
  if (n < 4) throw std::invalid_argument("verify_gl_sq_decompositions requires n >= 4");
  GlSqReport report;
  report.n = n;
  Int n2 = Int(n) * n;
  report.lambda2_expected = n2 * (n2 - 1) / 2;
  report.sym2_expected = n2 * (n2 + 1) / 2;
  FormalSum adj;
  adj.add(TensorTerm{{{"e", {kAdj}}}, {}, 1});
  report.lambda2_sum = formal_sum_dim(n, lambda2(adj));
  report.sym2_sum = formal_sum_dim(n, sym2(adj));
  report.ok = report.lambda2_sum == report.lambda2_expected &&
              report.sym2_sum == report.sym2_expected;
  return report;
}

nlohmann::json formal_sum_to_json(const FormalSum& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const TensorTerm& t : x.terms) {
    nlohmann::json jt;
    jt["factors"] = nlohmann::json::object();
    for (const auto& [edge, labels] : t.factors) {
      if (labels.size() == 1) {
        jt["factors"][edge] = bipartition_to_json(labels.front());
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const Bipartition& b : labels) arr.push_back(bipartition_to_json(b));
        jt["factors"][edge] = arr;
      }
    }
    jt["degree"] = nlohmann::json::object();
    for (const auto& [vertex, d] : t.degree) jt["degree"][vertex] = d;
    jt["mult"] = t.mult.convert_to<long long>();
    j.push_back(std::move(jt));
  }
  return j;
}

nlohmann::json center_maps_to_json(const std::vector<CenterMap>& maps) {
  nlohmann::json j = nlohmann::json::array();
  for (const CenterMap& m : maps) {
    const char* kind = m.kind == CenterMap::Kind::Edge
                           ? "edge"
                           : m.kind == CenterMap::Kind::Loop ? "loop" : "vertex_prime";
    j.push_back({{"kind", kind}, {"id", m.id}, {"map", m.to_string()}});
  }
  return j;
}

}  // namespace kacweyl
