#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zagreb/enumeration.hpp"

using namespace zagreb;

namespace {

// Every mask in ascending order, filtered with the matrix oracle.
std::vector<AdjacencyMask> brute_masks(const EnumerationSpec& spec) {
  std::vector<AdjacencyMask> out;
  std::size_t pairs = spec.n * (spec.n - 1) / 2;
  for (AdjacencyMask mask = 0; mask < (AdjacencyMask{1} << pairs); ++mask) {
    oracle::Matrix a(spec.n, std::vector<bool>(spec.n, false));
    for (std::size_t v = 1; v < spec.n; ++v) {
      for (std::size_t u = 0; u < v; ++u) {
        if ((mask >> (v * (v - 1) / 2 + u)) & 1) a[u][v] = a[v][u] = true;
      }
    }
    auto d = oracle::degrees(a);
    bool ok = std::all_of(d.begin(), d.end(), [&](std::int64_t x) {
      return x >= static_cast<std::int64_t>(spec.min_degree) && x <= static_cast<std::int64_t>(spec.max_degree);
    });
    if (ok && spec.connected_only) ok = oracle::connected(a);
    if (ok) out.push_back(mask);
  }
  return out;
}

std::size_t count(const EnumerationSpec& spec) {
  std::size_t c = 0;
  for_each_mask(spec, [&](AdjacencyMask) { ++c; });
  return c;
}

}  // namespace

TEST_CASE("labeled connected graph counts") {
  std::vector<std::size_t> expected{1, 1, 4, 38, 728, 26704};
  for (std::size_t n = 1; n <= 6; ++n) {
    EnumerationSpec spec{n, 0, n - 1, true, Dedup::None};
    CHECK(count(spec) == expected[n - 1]);
  }
}

TEST_CASE("unlabeled connected graph counts") {
  std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    EnumerationSpec spec{n, 0, n - 1, true, Dedup::CanonicalForm};
    CHECK(count(spec) == expected[n - 1]);
  }
  EnumerationSpec all{5, 0, 4, false, Dedup::CanonicalForm};
  CHECK(count(all) == 34);
}

TEST_CASE("small enumerations") {
  auto k2 = enumerate({2, 1, 1, false, Dedup::None});
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == complete(2));
  auto cubic = enumerate({4, 3, 3, false, Dedup::None});
  REQUIRE(cubic.size() == 1);
  CHECK(cubic[0] == complete(4));
  CHECK(enumerate({1, 0, 0, false, Dedup::None}).size() == 1);
}

TEST_CASE("enumeration matches a brute-force filter") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t lo = 0; lo < n; ++lo) {
      for (std::size_t hi = lo; hi < n; ++hi) {
        for (bool conn : {false, true}) {
          if (n == 6 && !(lo == 1 && hi == 3)) continue;
          EnumerationSpec spec{n, lo, hi, conn, Dedup::None};
          std::vector<AdjacencyMask> stream;
          for_each_mask(spec, [&](AdjacencyMask m) { stream.push_back(m); });
          CHECK(stream == brute_masks(spec));
        }
      }
    }
  }
}

TEST_CASE("canonical masks") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 7;
    Graph g = oracle::random_graph(rng, n, 0.5);
    AdjacencyMask c = canonical_mask(g);
    CHECK(is_canonical_mask(n, c));
    CHECK(c <= mask_of(g));
    CHECK(is_canonical_mask(n, mask_of(g)) == (c == mask_of(g)));
    CHECK(graph_from_mask(n, mask_of(g)) == g);
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    GraphBuilder b(n);
    for (const auto& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
    CHECK(canonical_mask(std::move(b).build()) == c);
  }
}

TEST_CASE("partitioned enumeration is deterministic") {
  EnumerationSpec spec{7, 1, 6, true, Dedup::CanonicalForm};
  auto one = enumerate_masks(spec, 1);
  auto three = enumerate_masks(spec, 3);
  CHECK(one == three);
  CHECK(one.size() == 853);
  CHECK(std::is_sorted(one.begin(), one.end()));
  std::vector<AdjacencyMask> sequential;
  for_each_mask(spec, [&](AdjacencyMask m) { sequential.push_back(m); });
  CHECK(one == sequential);
  CHECK(partition_count(spec) >= 1);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(EnumerationSpec({0, 0, 0, false, Dedup::None}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(EnumerationSpec({9, 0, 8, false, Dedup::None}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(EnumerationSpec({4, 3, 2, false, Dedup::None}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(EnumerationSpec({4, 0, 4, false, Dedup::None}).validate(), std::invalid_argument);
}

TEST_CASE("survey_equality") {
  EnumerationSpec spec{6, 1, 5, false, Dedup::CanonicalForm};
  auto rows = survey_equality(spec);
  CHECK_FALSE(rows.empty());
  std::size_t classified = 0;
  for (const auto& row : rows) {
    CHECK(row.agreement);
    CHECK(row.verdict == compare(row.graph()).verdict);
    if (row.structure) ++classified;
  }
  CHECK(classified > 0);

  auto fixed = survey_equality({6, 3, 4, false, Dedup::CanonicalForm}, IntervalSpec{3, 1});
  for (const auto& row : fixed) {
    CHECK(row.structure.has_value());
    CHECK(row.agreement);
  }
  CHECK_THROWS_AS(survey_equality({4, 0, 3, false, Dedup::None}), std::invalid_argument);
  CHECK_THROWS_AS(survey_equality({6, 2, 5, false, Dedup::None}, IntervalSpec{2, 3}), std::invalid_argument);
}

TEST_CASE("counterexample_search") {
  // No small connected graph violates the inequality; cross-check against the
  // matrix oracle over every unlabeled connected graph.
  CHECK(counterexample_search(7).empty());
  std::size_t violations = 0;
  for_each_graph({6, 1, 5, true, Dedup::CanonicalForm},
                 [&](const Graph& g) { violations += oracle::zagreb_gap(g) < 0 ? 1 : 0; });
  CHECK(violations == 0);
  CHECK_THROWS_AS(counterexample_search(9), std::invalid_argument);
}
