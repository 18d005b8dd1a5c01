#include "kacweyl/bipartition.hpp"

#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

namespace kacweyl {

namespace {

void check_partition(const std::vector<long long>& p, const char* name) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw std::invalid_argument(std::string(name) + " has a negative part");
    if (i + 1 < p.size() && p[i] < p[i + 1])
      throw std::invalid_argument(std::string(name) + " is not weakly decreasing");
  }
}

void trim(std::vector<long long>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::string partition_to_string(const std::vector<long long>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

}  // namespace

Bipartition::Bipartition(std::vector<long long> l, std::vector<long long> m)
    : lambda(std::move(l)), mu(std::move(m)) {
  check_partition(lambda, "lambda");
  check_partition(mu, "mu");
  trim(lambda);
  trim(mu);
}

long long Bipartition::boxes() const {
  return std::accumulate(lambda.begin(), lambda.end(), 0LL) +
         std::accumulate(mu.begin(), mu.end(), 0LL);
}

std::string Bipartition::to_string() const {
  return "[" + partition_to_string(lambda) + "," + partition_to_string(mu) + "]";
}

nlohmann::json bipartition_to_json(const Bipartition& b) {
  return nlohmann::json{{"lambda", b.lambda}, {"mu", b.mu}};
}

Bipartition bipartition_from_json(const nlohmann::json& j) {
  return Bipartition(j.at("lambda").get<std::vector<long long>>(),
                     j.at("mu").get<std::vector<long long>>());
}

}  // namespace kacweyl
