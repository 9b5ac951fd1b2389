#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zagreb/families.hpp"
#include "zagreb/invariants.hpp"

using namespace zagreb;

namespace {

// m*M1 - n*M2 from the adjacency matrix.
Integer matrix_defect(const Graph& g) { return -oracle::zagreb_gap(g); }

// m*M1 - n*M2 from the edge list, for graphs too large for a dense matrix.
Integer edge_defect(const Graph& g) {
  Integer m1 = 0, m2 = 0;
  for (Vertex v = 0; v < g.order(); ++v) m1 += Integer(g.degree(v)) * g.degree(v);
  for (const auto& e : g.edges()) m2 += Integer(g.degree(e.u)) * g.degree(e.v);
  return Integer(g.size()) * m1 - Integer(g.order()) * m2;
}

}  // namespace

TEST_CASE("G(1,1,6,1)") {
  Graph g = build_gxyzw({1, 1, 6, 1});
  CHECK(g.order() == 29);
  CHECK(g.size() == 41);
  CHECK(first_zagreb(g) == 272);
  CHECK(second_zagreb(g) == 396);
  CHECK(to_string(classify_regularity(g)) == "Other(2,3,5,6)");
  CHECK(is_connected(g));
  CHECK(family_order({1, 1, 6, 1}) == 29);
  CHECK(family_size({1, 1, 6, 1}) == 41);
}

TEST_CASE("builder is deterministic") {
  CHECK(build_gxyzw({2, 3, 4, 2}) == build_gxyzw({2, 3, 4, 2}));
}

TEST_CASE("closed forms match the built graph") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> small(1, 9);
  std::vector<FamilyParams> cases{{1, 1, 2, 1}, {1, 1, 3, 1}, {1, 1, 5, 1}, {4, 2, 3, 3}, {2, 5, 5, 7}};
  for (int i = 0; i < 40; ++i) cases.push_back({small(rng), small(rng), 1 + small(rng), small(rng)});
  for (const auto& p : cases) {
    CAPTURE(p.x);
    CAPTURE(p.y);
    CAPTURE(p.z);
    CAPTURE(p.w);
    Graph g = build_gxyzw(p);
    auto idx = oracle::indices(g);
    CHECK(Integer(family_order(p)) == idx.n);
    CHECK(Integer(family_size(p)) == idx.m);
    CHECK(family_first_zagreb(p) == idx.m1);
    CHECK(family_second_zagreb(p) == idx.m2);
    CHECK(family_defect_polynomial(p) == matrix_defect(g));
    CHECK(family_edge_classes(p).entries == edge_class_counts(g).entries);
    CHECK(degree_collision(p) == (p.z == 2 || p.z == 3 || p.z == 5));
    CHECK(degree_set(g).size() == (degree_collision(p) ? 3u : 4u));
  }
}

TEST_CASE("solve_params") {
  FamilyParams a = solve_params(1, 2);
  CHECK(a == FamilyParams{3217, 1, 2, 38});
  FamilyParams b = solve_params(1, 4);
  CHECK(b == FamilyParams{1089, 1, 4, 22});
  CHECK(edge_defect(build_gxyzw(a)) == 0);
  CHECK(edge_defect(build_gxyzw(b)) == 0);
  CHECK_THROWS_AS(solve_params(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(solve_params(1, 1), std::invalid_argument);
}

TEST_CASE("solutions give connected equality graphs with four degrees and large maximum degree") {
  for (std::uint64_t y = 1; y <= 3; ++y) {
    for (std::uint64_t z = 7; z <= 10; ++z) {
      FamilyParams p = solve_params(y, z);
      Graph g = build_gxyzw(p);
      CHECK(is_connected(g));
      CHECK(edge_defect(g) == 0);
      auto d = degree_set(g);
      CHECK(d == std::vector<Degree>{2, 3, 5, static_cast<Degree>(z)});
      CHECK(classify_regularity(g).kind == RegularityClass::Kind::Other);
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_gxyzw({0, 1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_gxyzw({1, 0, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_gxyzw({1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_gxyzw({1, 1, 2, 0}), std::invalid_argument);
}

TEST_CASE("catalog") {
  struct Case {
    std::string name;
    std::vector<std::uint64_t> params;
    Verdict verdict;
  };
  std::vector<Case> cases{
      {"subdivision-of-regular", {4, 5}, Verdict::Equal},  // S(K5)
      {"subdivision-of-regular", {3, 8}, Verdict::Equal},
      {"equal-complete-union", {4, 3}, Verdict::Equal},
      {"complete3-plus-cycle", {4}, Verdict::Equal},
      {"complete3-plus-cycle", {9}, Verdict::Equal},
      {"two-paths", {2, 2}, Verdict::Equal},
      {"two-paths", {3, 3}, Verdict::Equal},
      {"cycle-plus-K22", {5}, Verdict::Equal},
      {"cycle-plus-star4", {7}, Verdict::Equal},
      {"cycle-plus-star-b", {3, 5}, Verdict::StrictlyGreater},
      {"cycle-plus-star-b", {8, 9}, Verdict::StrictlyGreater},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto entry = catalog_entry(c.name, c.params);
    CHECK(entry.expected_verdict == c.verdict);
    Graph g = catalog_generate(entry);
    CHECK(compare(g).verdict == c.verdict);
    Integer gap = oracle::zagreb_gap(g);
    CHECK((gap == 0) == (c.verdict == Verdict::Equal));
  }
  CHECK(catalog_generate(catalog_entry("subdivision-of-regular", {4, 5})) == subdivision(complete(5)));

  auto c3k15 = compare(catalog_generate(catalog_entry("cycle-plus-star-b", {3, 5})));
  CHECK(c3k15.first_ratio() == Rational(42, 9));
  CHECK(c3k15.second_ratio() == Rational(37, 8));

  CHECK(catalog_families().size() == 7);
  CHECK_THROWS_AS(catalog_entry("petersen", {}), std::invalid_argument);
  CHECK_THROWS_AS(catalog_generate(catalog_entry("two-paths", {4, 4})), std::invalid_argument);
  CHECK_THROWS_AS(catalog_generate(catalog_entry("cycle-plus-star-b", {3, 4})), std::invalid_argument);
  CHECK_THROWS_AS(catalog_generate(catalog_entry("complete3-plus-cycle", {})), std::invalid_argument);
}
