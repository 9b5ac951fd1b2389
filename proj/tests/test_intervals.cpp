#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zagreb/intervals.hpp"
#include "zagreb/invariants.hpp"

using namespace zagreb;

namespace {

// Brute-force collision lists using fraction comparison rather than the
// library's integer discriminant.
std::vector<DegreeQuad> brute_collisions(std::uint64_t a, std::uint64_t p, bool harmonic) {
  std::vector<DegreeQuad> out;
  for (std::uint64_t x = a; x <= a + p; ++x)
    for (std::uint64_t y = x; y <= a + p; ++y)
      for (std::uint64_t u = a; u <= a + p; ++u)
        for (std::uint64_t v = u; v <= a + p; ++v) {
          if (std::pair(x, y) >= std::pair(u, v)) continue;
          bool hit = harmonic ? Rational(x + y, x * y) == Rational(u + v, u * v) : x * y == u * v;
          if (hit) out.push_back({x, y, u, v});
        }
  return out;
}

std::optional<DegreeQuad> brute_negative(const std::vector<std::uint64_t>& set) {
  std::optional<DegreeQuad> best;
  for (auto i : set)
    for (auto j : set)
      for (auto k : set)
        for (auto l : set) {
          if (oracle::f_unfactored(i, j, k, l) < 0) {
            DegreeQuad q{i, j, k, l};
            if (!best || q < *best) best = q;
          }
        }
  return best;
}

}  // namespace

TEST_CASE("is_good_interval") {
  CHECK(is_good_interval(3, 3));
  CHECK(is_good_interval(1, 3));
  CHECK_FALSE(is_good_interval(2, 3));
  CHECK(is_good_interval(1, 0));
  CHECK(is_good_interval(1, 1));
  CHECK(is_good_interval(1, 2));
  CHECK_FALSE(is_good_interval(1, 4));
  CHECK(is_good_interval(45, 10));
  CHECK_FALSE(is_good_interval(44, 10));
  CHECK_THROWS_AS(is_good_interval(0, 2), std::invalid_argument);
  CHECK(good_threshold(0) == 0);
  CHECK(good_threshold(1) == 0);
  CHECK(good_threshold(5) == 10);
}

TEST_CASE("scan_f_sign") {
  CHECK_FALSE(scan_f_sign(IntervalSpec{3, 3}).has_value());
  std::vector<std::uint64_t> bad{2, 3, 5};
  auto witness = scan_f_sign(bad);
  REQUIRE(witness.has_value());
  CHECK(witness->quad == DegreeQuad{2, 5, 3, 3});
  CHECK(witness->value == Rational(-1, 30));
  std::vector<std::uint64_t> single{7};
  CHECK_FALSE(scan_f_sign(single).has_value());
  CHECK_FALSE(scan_f_sign(IntervalSpec{1, 3}).has_value());
  std::vector<std::uint64_t> empty;
  CHECK_THROWS_AS(scan_f_sign(empty), std::invalid_argument);
  std::vector<std::uint64_t> zero{0, 1};
  CHECK_THROWS_AS(scan_f_sign(zero), std::invalid_argument);
}

TEST_CASE("scan_f_sign returns the lexicographically smallest negative quadruple") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> degree(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::uint64_t> set;
    for (int i = 0; i < 4; ++i) set.push_back(degree(rng));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    auto expected = brute_negative(set);
    auto found = scan_f_sign(set);
    REQUIRE(expected.has_value() == found.has_value());
    if (found) {
      CHECK(found->quad == *expected);
      CHECK(found->value == oracle::f_unfactored(expected->x, expected->y, expected->u, expected->v));
    }
  }
}

TEST_CASE("product collisions") {
  CHECK(find_product_collisions(3, 3).tuples.empty());
  CHECK(find_product_collisions(1, 3).tuples == std::vector<DegreeQuad>{{1, 4, 2, 2}});
  auto wide = find_product_collisions(1, 5).tuples;
  CHECK(std::find(wide.begin(), wide.end(), DegreeQuad{1, 6, 2, 3}) != wide.end());
  CHECK(find_product_collisions(1, 5).kind == CollisionReport::Kind::Product);
  for (std::uint64_t a = 1; a <= 8; ++a) {
    for (std::uint64_t p = 0; p <= 8; ++p) CHECK(find_product_collisions(a, p).tuples == brute_collisions(a, p, false));
  }
}

TEST_CASE("harmonic discriminant and collisions") {
  CHECK(harmonic_discriminant(3, 6, 4, 4) == 0);
  CHECK(harmonic_discriminant(5, 9, 5, 9) == 0);
  CHECK(harmonic_discriminant(2, 5, 3, 3) == -3);

  CHECK(find_harmonic_collisions(3, 3).tuples == std::vector<DegreeQuad>{{3, 6, 4, 4}});
  CHECK(find_harmonic_collisions(10, 5).tuples == std::vector<DegreeQuad>{{10, 15, 12, 12}});
  CHECK(find_harmonic_collisions(6, 4).tuples.empty());
  CHECK(find_harmonic_collisions(4, 3).tuples.empty());
  for (std::uint64_t a = 1; a <= 8; ++a) {
    for (std::uint64_t p = 0; p <= 8; ++p) CHECK(find_harmonic_collisions(a, p).tuples == brute_collisions(a, p, true));
  }
  CHECK(predicted_harmonic_collisions(3, 3) == std::vector<DegreeQuad>{{3, 6, 4, 4}});
  CHECK(predicted_harmonic_collisions(4, 3).empty());
  CHECK(predicted_harmonic_collisions(6, 4).empty());
}

TEST_CASE("endpoint order biconditional") {
  for (std::uint64_t p = 1; p <= 12; ++p) CHECK(endpoint_order_violations(p).empty());
}

TEST_CASE("f-zero census inside good intervals") {
  // Within a good interval, f vanishes on distinct pairs exactly at product
  // or harmonic collisions.
  for (std::uint64_t p = 1; p <= 7; ++p) {
    std::uint64_t a = std::max<std::uint64_t>(1, good_threshold(p));
    for (std::uint64_t shift = 0; shift <= 3; ++shift, ++a) {
      std::vector<DegreeQuad> zeros;
      for (std::uint64_t x = a; x <= a + p; ++x)
        for (std::uint64_t y = x; y <= a + p; ++y)
          for (std::uint64_t u = a; u <= a + p; ++u)
            for (std::uint64_t v = u; v <= a + p; ++v)
              if (std::pair(x, y) < std::pair(u, v) && interaction(x, y, u, v) == 0) zeros.push_back({x, y, u, v});
      auto expected = find_product_collisions(a, p).tuples;
      auto harmonic = find_harmonic_collisions(a, p).tuples;
      expected.insert(expected.end(), harmonic.begin(), harmonic.end());
      std::sort(expected.begin(), expected.end());
      CHECK(zeros == expected);
    }
  }
}

TEST_CASE("classify_equality_structure examples") {
  auto mixed = classify_equality_structure(disjoint_union(complete(5), complete_bipartite(3, 6)), {3, 3});
  CHECK(mixed.verdict == EqualityCase::MixedRegularBiregularCase);
  CHECK(mixed.evidence.size() == 2);

  Graph stars_cycles = disjoint_union(star(4), cycle(7));
  auto sc = classify_equality_structure(stars_cycles, {1, 3});
  CHECK(sc.verdict == EqualityCase::StarsAndCyclesCase);
  auto report = compare(stars_cycles);
  CHECK(report.m1 == 48);
  CHECK(report.n == 12);
  CHECK(report.m2 == 44);
  CHECK(report.m == 11);
  CHECK(report.first_ratio() == 4);
  CHECK(report.second_ratio() == 4);

  // Connected, three degrees inside [1, 4].
  std::vector<Edge> spider{{0, 1}, {0, 2}, {0, 4}, {4, 3}};
  CHECK(classify_equality_structure(Graph::from_edges(5, spider), {1, 3}).verdict == EqualityCase::NotEquality);

  CHECK(classify_equality_structure(disjoint_union(complete(4), complete(4)), {3, 0}).verdict ==
        EqualityCase::RegularCase);
  CHECK(classify_equality_structure(complete_bipartite(3, 4), {3, 1}).verdict ==
        EqualityCase::BiregularClass1Case);
  CHECK(classify_equality_structure(disjoint_union(star(4), star(4)), {1, 3}).verdict ==
        EqualityCase::BiregularClass1Case);
  CHECK(classify_equality_structure(disjoint_union(cycle(5), complete(4)), {2, 1}).verdict ==
        EqualityCase::NotEquality);
  CHECK(classify_equality_structure(disjoint_union(complete_bipartite(10, 15), complete(13)), {10, 5}).verdict ==
        EqualityCase::MixedRegularBiregularCase);
  CHECK(compare(disjoint_union(complete_bipartite(10, 15), complete(13))).verdict == Verdict::Equal);
}

TEST_CASE("classify_equality_structure preconditions") {
  CHECK_THROWS_AS(classify_equality_structure(cycle(4), {2, 3}), std::invalid_argument);   // [2,5] is bad
  CHECK_THROWS_AS(classify_equality_structure(complete(5), {1, 2}), std::invalid_argument);  // degree 4 outside
  CHECK_THROWS_AS(classify_equality_structure(disjoint_union(cycle(3), Graph(1)), {1, 3}), std::invalid_argument);
}

TEST_CASE("classify_equality_structure agrees with compare on random unions") {
  // Random disjoint unions of small blocks whose degree span is a good
  // interval.
  std::mt19937_64 rng(77);
  std::vector<Graph> blocks{cycle(3),  cycle(5),           star(4),
                            complete(4), complete(5),      complete_bipartite(3, 6),
                            path(3),   complete_bipartite(2, 4), complete_bipartite(3, 4)};
  std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
  int classified = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = blocks[pick(rng)];
    for (int extra = trial % 3; extra > 0; --extra) g = disjoint_union(g, blocks[pick(rng)]);
    auto d = degree_set(g);
    IntervalSpec span{d.front(), d.back() - d.front()};
    if (!is_good_interval(span)) continue;
    ++classified;
    auto structure = classify_equality_structure(g, span);
    CHECK((structure.verdict != EqualityCase::NotEquality) == (compare(g).verdict == Verdict::Equal));
  }
  CHECK(classified > 100);
}

TEST_CASE("equality case names round-trip") {
  for (auto c : {EqualityCase::RegularCase, EqualityCase::BiregularClass1Case,
                 EqualityCase::MixedRegularBiregularCase, EqualityCase::StarsAndCyclesCase,
                 EqualityCase::NotEquality}) {
    CHECK(parse_equality_case(to_string(c)) == c);
  }
}
