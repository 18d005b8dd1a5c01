#include "kacweyl/weight.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace kacweyl {

Coord Coord::leg(std::string e, long long i) {
  if (i == 0) throw std::invalid_argument("leg coordinate index 0 does not exist");
  return {Kind::Leg, std::move(e), i};
}

std::string Coord::key() const {
  switch (kind) {
    case Kind::Central:
      return "v:" + id;
    case Kind::CentralPrime:
      return "v':" + id;
    case Kind::Leg:
      return "e:" + id + ":" + std::to_string(index);
  }
  throw std::logic_error("bad coord kind");
}

Coord Coord::from_key(const std::string& key) {
  if (key.rfind("v':", 0) == 0) return central_prime(key.substr(3));
  if (key.rfind("v:", 0) == 0) return central(key.substr(2));
  if (key.rfind("e:", 0) == 0) {
    auto colon = key.rfind(':');
    if (colon > 2 && colon != std::string::npos)
      return leg(key.substr(2, colon - 2), std::stoll(key.substr(colon + 1)));
  }
  throw std::invalid_argument("bad coordinate key: " + key);
}

Int Weight::coeff(const Coord& c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void Weight::set(const Coord& c, Int value) {
  if (value == 0)
    coeffs_.erase(c);
  else
    coeffs_[c] = std::move(value);
}

void Weight::add(const Coord& c, const Int& delta) {
  if (delta == 0) return;
  auto [it, fresh] = coeffs_.try_emplace(c, delta);
  if (!fresh) {
    it->second += delta;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Weight& Weight::operator+=(const Weight& other) {
  for (const auto& [c, x] : other.coeffs_) add(c, x);
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  for (const auto& [c, x] : other.coeffs_) add(c, -x);
  return *this;
}

Weight& Weight::operator*=(const Int& k) {
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [c, x] : coeffs_) x *= k;
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& [c, x] : w.coeffs_) x = -x;
  return w;
}

bool operator<(const Weight& a, const Weight& b) {
  auto ia = a.coeffs_.begin(), ib = b.coeffs_.begin();
  for (; ia != a.coeffs_.end() && ib != b.coeffs_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.coeffs_.end() && ib != b.coeffs_.end();
}

std::string Weight::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, x] : coeffs_) {
    if (!first) out << ";";
    out << c.key() << "=" << x;
    first = false;
  }
  return first ? "0" : out.str();
}

SimpleRootId SimpleRootId::leg(std::string e, int sign, long long level) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("leg root sign must be +-1");
  if (level < 1) throw std::invalid_argument("leg root level must be >= 1");
  return {Kind::Leg, std::move(e), sign, level};
}

std::string SimpleRootId::key() const {
  if (kind == Kind::Central) return "v:" + id;
  return "leg:" + id + ":" + std::to_string(sign) + ":" + std::to_string(level);
}

SimpleRootId SimpleRootId::from_key(const std::string& key) {
  if (key.rfind("v:", 0) == 0) return central(key.substr(2));
  if (key.rfind("leg:", 0) == 0) {
    auto c2 = key.rfind(':');
    auto c1 = key.rfind(':', c2 - 1);
    if (c1 > 4 && c2 != std::string::npos)
      return leg(key.substr(4, c1 - 4), std::stoi(key.substr(c1 + 1, c2 - c1 - 1)),
                 std::stoll(key.substr(c2 + 1)));
  }
  throw std::invalid_argument("bad generator key: " + key);
}

namespace {

void check_root_id(const Graph& graph, const SimpleRootId& r) {
  if (r.kind == SimpleRootId::Kind::Central) {
    if (!graph.has_vertex(r.id)) throw std::invalid_argument("unknown vertex: " + r.id);
  } else {
    if (!graph.find_edge(r.id)) throw std::invalid_argument("unknown edge: " + r.id);
  }
}

}  // namespace

Weight simple_root(const Graph& graph, const SimpleRootId& r) {
  check_root_id(graph, r);
  Weight w;
  if (r.kind == SimpleRootId::Kind::Leg) {
    // alpha_{i,e} = eps_{i+1,e} - eps_{i,e}, mirrored on the source side.
    long long i = r.sign * r.level;
    long long next = r.sign * (r.level + 1);
    w.add(Coord::leg(r.id, next), 1);
    w.add(Coord::leg(r.id, i), -1);
  } else {
    w.add(Coord::central(r.id), 1);
    for (const Slot& s : slots_at(graph, r.id)) w.add(Coord::leg(s.edge, s.sign), 1);
  }
  return w;
}

Int pair_coroot(const Graph& graph, const Weight& w, const SimpleRootId& r) {
  check_root_id(graph, r);
  if (r.kind == SimpleRootId::Kind::Leg) {
    return w.coeff(Coord::leg(r.id, r.sign * (r.level + 1))) -
           w.coeff(Coord::leg(r.id, r.sign * r.level));
  }
  Int n = valence(graph, r.id);
  Int result = w.coeff(Coord::central_prime(r.id)) + (2 - n) * w.coeff(Coord::central(r.id));
  for (const Slot& s : slots_at(graph, r.id)) result += w.coeff(Coord::leg(s.edge, s.sign));
  return result;
}

Int quad_invariant(const Graph& graph, const std::string& v, const Weight& w) {
  Int n = valence(graph, v);
  auto slots = slots_at(graph, v);
  Int result = -(n - 2) * w.coeff(Coord::central(v)) * w.coeff(Coord::central(v));
  for (const auto& [c, x] : w.coeffs()) {
    if (c.kind != Coord::Kind::Leg) continue;
    int side = c.index > 0 ? +1 : -1;
    for (const Slot& s : slots) {
      if (s.edge == c.id && s.sign == side) {
        result += x * x;
        break;
      }
    }
  }
  return result;
}

Int lin_invariant(const Graph& graph, const std::string& v, const Slot& slot, const Weight& w) {
  auto slots = slots_at(graph, v);
  if (std::find(slots.begin(), slots.end(), slot) == slots.end())
    throw std::invalid_argument("slot (" + slot.edge + "," + std::to_string(slot.sign) +
                                ") is not at vertex " + v);
  Int result = w.coeff(Coord::central(v));
  for (const auto& [c, x] : w.coeffs()) {
    if (c.kind == Coord::Kind::Leg && c.id == slot.edge && (c.index > 0) == (slot.sign > 0))
      result -= x;
  }
  return result;
}

nlohmann::json weight_to_json(const Weight& w) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [c, x] : w.coeffs()) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      j[c.key()] = x.convert_to<long long>();
    else
      j[c.key()] = x.str();
  }
  return j;
}

Weight weight_from_json(const nlohmann::json& j) {
  Weight w;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Int value = it.value().is_string() ? Int(it.value().get<std::string>())
                                       : Int(it.value().get<long long>());
    w.set(Coord::from_key(it.key()), std::move(value));
  }
  return w;
}

}  // namespace kacweyl
