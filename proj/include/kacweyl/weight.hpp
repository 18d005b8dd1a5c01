#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "kacweyl/graph.hpp"

namespace kacweyl {

using Int = boost::multiprecision::cpp_int;

// Coordinate symbol on h*: eps_v, eps_v' or eps_{i,e} with i in Z \ {0}.
// Positive indices run along the target-side chain of an edge, negative
// indices along the source side.
struct Coord {
  enum class Kind { Central, CentralPrime, Leg };
  Kind kind = Kind::Central;
  std::string id;       // vertex id for Central/CentralPrime, edge id for Leg
  long long index = 0;  // nonzero, Leg only

  static Coord central(std::string v) { return {Kind::Central, std::move(v), 0}; }
  static Coord central_prime(std::string v) { return {Kind::CentralPrime, std::move(v), 0}; }
  static Coord leg(std::string e, long long i);

  std::string key() const;  // "v:<id>", "v':<id>", "e:<id>:<i>"
  static Coord from_key(const std::string& key);

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

// Finitely supported integer combination of Coords. Zero coefficients are
// never stored.
class Weight {
 public:
  Weight() = default;

  const std::map<Coord, Int>& coeffs() const { return coeffs_; }
  Int coeff(const Coord& c) const;
  void set(const Coord& c, Int value);
  void add(const Coord& c, const Int& delta);

  bool is_zero() const { return coeffs_.empty(); }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Int& k);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Int& k, Weight w) { return w *= k; }
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  // Lexicographic over the ordered (coord, coefficient) pairs; used for the
  // deterministic term ordering of expansions.
  friend bool operator<(const Weight& a, const Weight& b);

  std::string to_string() const;

 private:
  std::map<Coord, Int> coeffs_;
};

// Simple root name: a leg node alpha_{i,e} on the sign side of edge e
// (level i >= 1), or the central node alpha_v.
struct SimpleRootId {
  enum class Kind { Leg, Central };
  Kind kind = Kind::Central;
  std::string id;  // edge id for Leg, vertex id for Central
  int sign = 0;    // +1 / -1, Leg only
  long long level = 0;  // >= 1, Leg only

  static SimpleRootId central(std::string v) { return {Kind::Central, std::move(v), 0, 0}; }
  static SimpleRootId leg(std::string e, int sign, long long level);

  std::string key() const;  // "v:<id>" or "leg:<edge>:<sign>:<i>"
  static SimpleRootId from_key(const std::string& key);

  friend auto operator<=>(const SimpleRootId&, const SimpleRootId&) = default;
};

// alpha_{i,e} or alpha_v as an element of h*.
Weight simple_root(const Graph& graph, const SimpleRootId& r);

// Pairing of w with the coroot of r. The central coroot is the extended one,
// 1_v' + (2-N) 1_v + sum over incidence slots.
Int pair_coroot(const Graph& graph, const Weight& w, const SimpleRootId& r);

// -(N-2) a_v^2 + sum of a_{i,e}^2 over v-adjacent chains (a_v' ignored).
Int quad_invariant(const Graph& graph, const std::string& v, const Weight& w);

// a_v - sum_{i>=1} a_{sign*i, edge} for the given incidence slot at v.
Int lin_invariant(const Graph& graph, const std::string& v, const Slot& slot, const Weight& w);

nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

}  // namespace kacweyl
