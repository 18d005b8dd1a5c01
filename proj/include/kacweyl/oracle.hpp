#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "kacweyl/orbit.hpp"

namespace kacweyl {

// Star diagram with N legs truncated to M nodes per leg: coordinates
// (a_v, a_{1..M+1,k} per leg, a_v'), generators s_v and the M adjacent
// transpositions s_{i,k}, 1 <= i <= M, per leg.
struct TruncatedStar {
  int N = 3;
  int M = 1;

  int dim() const { return 2 + N * (M + 1); }
  int generator_count() const { return 1 + N * M; }
  // Row/column of a_{i,k}, 1 <= i <= M+1; a_v is 0, a_v' is dim()-1.
  int coord(int leg, int i) const { return 1 + leg * (M + 1) + (i - 1); }
};

// Row-major dim x dim integer matrix acting on coordinate vectors.
using OracleMatrix = std::vector<std::int32_t>;

OracleMatrix identity_matrix(const TruncatedStar& trunc);

// Generator 0 is s_v; generator 1 + k*M + (i-1) is s_{i,k}.
int central_generator();
int leg_generator(const TruncatedStar& trunc, int leg, int i);

void apply_generator(const TruncatedStar& trunc, int gen, std::vector<long long>& x);
OracleMatrix left_multiply(const TruncatedStar& trunc, int gen, const OracleMatrix& m);

struct GroupElement {
  int index = 0;
  int length = 0;
  int parent = -1;  // -1 for the identity
  int gen = -1;     // generator with element = gen * parent
  const OracleMatrix* matrix = nullptr;
};

struct Enumeration {
  TruncatedStar trunc;
  std::vector<GroupElement> elements;  // grouped by length, identity first
  std::vector<long long> counts;      // counts[l] = elements of length l
  std::map<OracleMatrix, int> seen;    // owns the matrices; value = element index

  // Reduced word, leftmost letter applied last: element = word[0] * ... * parent chain.
  std::vector<int> word(int index) const;
};

// All distinct elements of length <= max_len, deduped by matrix.
// Throws ResourceCapError past the element cap.
Enumeration enumerate(const TruncatedStar& trunc, int max_len, long long cap = 2000000);

// Column j of the matrix, i.e. the image of the j-th basis vector.
std::vector<long long> matrix_column(const TruncatedStar& trunc, const OracleMatrix& m, int j);

// Root vector positivity via the simple-root expansion; x must be a root image.
bool is_positive_root_vector(const TruncatedStar& trunc, const std::vector<long long>& x);

// w is X-reduced iff it keeps every leg simple root positive.
bool is_xreduced(const TruncatedStar& trunc, const OracleMatrix& m);

// w^t G w = G for G = diag(-(N-2), 1, ..., 1) on (a_v, legs); a_v' excluded.
bool preserves_gram(const TruncatedStar& trunc, const OracleMatrix& m);

// beta_k = s_{i_m}...s_{i_{k+1}}(alpha_{i_k}) for the reduced word, as vectors.
std::vector<std::vector<long long>> inversion_root_vectors(const TruncatedStar& trunc,
                                                           const std::vector<int>& word);

// The matching one-vertex star graph: vertex "v", edges "leg01".."legNN"
// pointing at v with amputated sources.
Graph truncated_star_graph(const TruncatedStar& trunc);

OrbitState state_from_vector(const TruncatedStar& trunc, const Graph& graph,
                             const std::vector<long long>& x);

struct OracleReport {
  bool ok = false;
  int max_len = 0;
  std::vector<long long> xreduced_counts;  // per length
  std::vector<long long> orbit_counts;     // per level - 1
  long long total_elements = 0;
  std::vector<std::string> mismatches;
};

// Cross-checks the oracle against the orbit module on the truncated star:
// bijection w -> w(eps_v), level = length + 1, no same-level state edges,
// and the support condition on inversion roots of X-reduced words.
OracleReport compare_with_orbit(const TruncatedStar& trunc, int max_len);

nlohmann::json oracle_report_to_json(const OracleReport& report);

}  // namespace kacweyl
