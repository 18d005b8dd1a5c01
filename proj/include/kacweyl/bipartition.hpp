#pragma once

#include <compare>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace kacweyl {

// Pair of partitions (lambda, mu), weakly decreasing, trailing zeros trimmed.
struct Bipartition {
  std::vector<long long> lambda;
  std::vector<long long> mu;

  Bipartition() = default;
  Bipartition(std::vector<long long> l, std::vector<long long> m);

  bool is_trivial() const { return lambda.empty() && mu.empty(); }
  long long boxes() const;

  std::string to_string() const;  // "[(2,1),(1)]"

  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

nlohmann::json bipartition_to_json(const Bipartition& b);
Bipartition bipartition_from_json(const nlohmann::json& j);

}  // namespace kacweyl
