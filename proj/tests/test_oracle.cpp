#include <doctest.h>

#include <nlohmann/json.hpp>

#include "kacweyl/errors.hpp"
#include "kacweyl/oracle.hpp"

using namespace kacweyl;

TEST_CASE("coordinate layout and generator indexing") {
  TruncatedStar t{3, 2};
  CHECK(t.dim() == 11);
  CHECK(t.generator_count() == 7);
  CHECK(t.coord(0, 1) == 1);
  CHECK(t.coord(2, 3) == 9);
  CHECK(central_generator() == 0);
  CHECK(leg_generator(t, 0, 1) == 1);
  CHECK(leg_generator(t, 2, 2) == 6);
  CHECK_THROWS_AS(leg_generator(t, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(leg_generator(t, 0, 3), std::invalid_argument);
}

TEST_CASE("generator action on vectors") {
  TruncatedStar t{3, 1};
  // eps_v as a coordinate vector.
  std::vector<long long> x(t.dim(), 0);
  x[0] = 1;
  apply_generator(t, leg_generator(t, 0, 1), x);
  CHECK(x[0] == 1);  // leg generators fix eps_v
  apply_generator(t, central_generator(), x);
  CHECK(x[0] == 2);
  for (int k = 0; k < 3; ++k) CHECK(x[t.coord(k, 1)] == 1);
  CHECK(x[t.dim() - 1] == 0);
  apply_generator(t, central_generator(), x);
  std::vector<long long> eps(t.dim(), 0);
  eps[0] = 1;
  CHECK(x == eps);
}

TEST_CASE("left multiplication matches vector action") {
  TruncatedStar t{3, 2};
  OracleMatrix m = identity_matrix(t);
  m = left_multiply(t, central_generator(), m);
  m = left_multiply(t, leg_generator(t, 1, 1), m);
  for (int j = 0; j < t.dim(); ++j) {
    std::vector<long long> e(t.dim(), 0);
    e[j] = 1;
    apply_generator(t, central_generator(), e);
    apply_generator(t, leg_generator(t, 1, 1), e);
    CHECK(matrix_column(t, m, j) == e);
  }
}

TEST_CASE("enumeration sizes") {
  TruncatedStar t{3, 1};
  Enumeration trivial = enumerate(t, 0);
  CHECK(trivial.elements.size() == 1);
  CHECK(trivial.counts == std::vector<long long>{1});
  CHECK(trivial.elements[0].length == 0);

  Enumeration one = enumerate(t, 1);
  CHECK(one.elements.size() == 5);
  CHECK(one.counts == std::vector<long long>{1, 4});

  CHECK_THROWS_AS(enumerate(TruncatedStar{3, 2}, 6, /*cap=*/100), ResourceCapError);
}

TEST_CASE("words rebuild the matrices") {
  TruncatedStar t{3, 1};
  Enumeration en = enumerate(t, 4);
  for (const GroupElement& el : en.elements) {
    std::vector<int> word = en.word(el.index);
    CHECK(static_cast<int>(word.size()) == el.length);
    OracleMatrix m = identity_matrix(t);
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = left_multiply(t, *it, m);
    CHECK(m == *el.matrix);
  }
}

TEST_CASE("every element preserves the Gram form") {
  for (TruncatedStar t : {TruncatedStar{3, 1}, TruncatedStar{4, 1}, TruncatedStar{3, 2}}) {
    Enumeration en = enumerate(t, 4);
    for (const GroupElement& el : en.elements) CHECK(preserves_gram(t, *el.matrix));
  }
}

TEST_CASE("X-reduced elements and the stabilizer of eps_v") {
  TruncatedStar t{3, 1};
  CHECK(is_xreduced(t, identity_matrix(t)));
  CHECK(is_xreduced(t, left_multiply(t, central_generator(), identity_matrix(t))));
  CHECK_FALSE(
      is_xreduced(t, left_multiply(t, leg_generator(t, 0, 1), identity_matrix(t))));

  std::vector<long long> eps(t.dim(), 0);
  eps[0] = 1;
  Enumeration en = enumerate(t, 4);
  for (const GroupElement& el : en.elements) {
    std::vector<int> word = en.word(el.index);
    bool uses_central = false;
    for (int g : word) uses_central |= (g == central_generator());
    bool fixes = matrix_column(t, *el.matrix, 0) == eps;
    // A word of minimal length fixes eps_v exactly when it avoids s_v.
    CHECK(fixes == !uses_central);
  }
}

TEST_CASE("inversion roots of X-reduced words have central support") {
  TruncatedStar t{3, 2};
  Enumeration en = enumerate(t, 5);
  for (const GroupElement& el : en.elements) {
    if (!is_xreduced(t, *el.matrix)) continue;
    for (const auto& root : inversion_root_vectors(t, en.word(el.index))) {
      CHECK(is_positive_root_vector(t, root));
      CHECK(root[0] != 0);
    }
  }
}

TEST_CASE("state conversion") {
  TruncatedStar t{3, 1};
  Graph g = truncated_star_graph(t);
  CHECK(g.vertices == std::vector<std::string>{"v"});
  REQUIRE(g.edges.size() == 3);
  CHECK(g.edges[0].id == "leg01");
  CHECK(g.edges[0].target == "v");
  CHECK(g.edges[0].source.empty());
  CHECK(validate(g).empty());

  std::vector<long long> x(t.dim(), 0);
  x[0] = 1;
  CHECK(state_from_vector(t, g, x) == initial_state(g, "v"));
  apply_generator(t, central_generator(), x);
  OrbitState s = state_from_vector(t, g, x);
  CHECK(s.a_v == Int(2));
  CHECK(s.slots == std::vector<std::vector<Int>>{{1}, {1}, {1}});
}

TEST_CASE("cross-check against the orbit module") {
  for (auto [n, m, len] : {std::tuple{3, 1, 3}, {4, 1, 3}, {3, 2, 4}}) {
    OracleReport report = compare_with_orbit(TruncatedStar{n, m}, len);
    CHECK(report.ok);
    CHECK(report.mismatches.empty());
    CHECK(report.xreduced_counts == report.orbit_counts);
  }
}

TEST_CASE("frozen regression: N=3 M=2 up to length 6") {
  OracleReport report = compare_with_orbit(TruncatedStar{3, 2}, 6);
  REQUIRE(report.ok);
  CHECK(report.total_elements == 1420);
  CHECK(report.xreduced_counts == std::vector<long long>{1, 1, 3, 6, 10, 16, 27});

  nlohmann::json j = oracle_report_to_json(report);
  CHECK(j["ok"] == true);
  CHECK(j["total_elements"] == 1420);
}
