#pragma once

#include <map>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "kacweyl/bipartition.hpp"
#include "kacweyl/graph.hpp"
#include "kacweyl/weight.hpp"

namespace kacweyl {

// Tensor product of indecomposable labels, one list of bipartitions per edge
// (absent edge = trivial factor; a list longer than one is an unexpanded
// product of labels on the same edge). Graded by the free abelian group on
// the vertices.
struct TensorTerm {
  std::map<std::string, std::vector<Bipartition>> factors;
  std::map<std::string, long long> degree;
  Int mult = 1;

  void canonicalize();  // drop trivial labels and zero degrees, sort per edge
  std::string to_string() const;

  // Compare by (degree, factors); multiplicity excluded so equal shapes merge.
  friend bool same_shape(const TensorTerm& a, const TensorTerm& b) {
    return a.factors == b.factors && a.degree == b.degree;
  }
  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
  friend bool operator<(const TensorTerm& a, const TensorTerm& b);
};

// Multiplicity-merged list of TensorTerms in canonical order.
struct FormalSum {
  std::vector<TensorTerm> terms;

  void add(TensorTerm term);
  void normalize();
  std::string to_string() const;

  friend bool operator==(const FormalSum&, const FormalSum&) = default;
};

// Degree-v component of the algebra: V* at source slots, V at target slots,
// the adjoint-kernel label on loops; degree e_v.
TensorTerm degree_component(const Graph& graph, const std::string& v);

// Label-dualizing involution: swap lambda <-> mu in every factor, negate
// the degree (the dual of the degree-v component sits in degree -v).
TensorTerm dualize(const TensorTerm& term);

// The six generator families of the Serre relations ideal.
FormalSum serre_generators(const Graph& graph);

// Symbolic center generators: one (1, coev, -1) map per non-loop edge, one
// coev per loop, one 1_v' per vertex.
struct CenterMap {
  enum class Kind { Edge, Loop, VertexPrime };
  Kind kind = Kind::Edge;
  std::string id;  // edge id or vertex id

  std::string to_string() const;
  friend bool operator==(const CenterMap&, const CenterMap&) = default;
};

std::vector<CenterMap> center_generators(const Graph& graph);

// Formal exterior/symmetric square over the supported single-box labels.
// Throws UnsupportedLabelError on any other factor label.
FormalSum lambda2(const FormalSum& x);
FormalSum sym2(const FormalSum& x);

// Dimension of the GL_n irreducible with highest weight
// (lambda_1, ..., 0, ..., -mu_2, -mu_1) by the Weyl dimension formula.
Int gl_dim(long long n, const Bipartition& b);

// Product of gl_dim over all factors, summed with multiplicities.
Int formal_sum_dim(long long n, const FormalSum& x);

struct GlSqReport {
  long long n = 0;
  Int lambda2_expected;  // n^2 (n^2 - 1) / 2
  Int lambda2_sum;       // via gl_dim over the expansion of Lambda^2(V (x) V*)
  Int sym2_expected;     // n^2 (n^2 + 1) / 2
  Int sym2_sum;
  bool ok = false;
};

GlSqReport verify_gl_sq_decompositions(long long n);

nlohmann::json formal_sum_to_json(const FormalSum& x);
nlohmann::json center_maps_to_json(const std::vector<CenterMap>& maps);

}  // namespace kacweyl
