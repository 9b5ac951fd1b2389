#include "zagreb/intervals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zagreb/invariants.hpp"

namespace zagreb {

namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

std::vector<Pair> ordered_pairs(std::uint64_t a, std::uint64_t p) {
  std::vector<Pair> out;
  for (std::uint64_t x = a; x <= a + p; ++x) {
    for (std::uint64_t y = x; y <= a + p; ++y) out.emplace_back(x, y);
  }
  return out;
}

template <typename Pred>
std::vector<DegreeQuad> collisions(std::uint64_t a, std::uint64_t p, Pred pred) {
  if (a == 0) throw std::invalid_argument("interval needs a >= 1");
  auto pairs = ordered_pairs(a, p);
  std::vector<DegreeQuad> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      DegreeQuad q{pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second};
      if (pred(q)) out.push_back(q);
    }
  }
  return out;
}

bool is_star4(const Graph& c) {
  return c.order() == 5 && c.size() == 4 && degree_set(c) == std::vector<Degree>{1, 4};
}

bool is_cycle(const Graph& c) {
  return c.order() >= 3 && c.size() == c.order() && degree_set(c) == std::vector<Degree>{2};
}

// Odd q >= 3 with degree set {q(q-1)/2, (q²-1)/2, q(q+1)/2}, if the given
// low/high degrees fit that pattern.
std::optional<std::uint64_t> mixed_case_parameter(std::uint64_t low, std::uint64_t high) {
  if (high <= low) return std::nullopt;
  std::uint64_t q = high - low;
  if (q < 3 || q % 2 == 0 || low != good_threshold(q)) return std::nullopt;
  return q;
}

}  // namespace

std::uint64_t good_threshold(std::uint64_t p) { return p == 0 ? 0 : p * (p - 1) / 2; }

bool is_good_interval(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::invalid_argument("interval needs a >= 1");
  return IntervalSpec{a, p}.meets_threshold() || (a == 1 && p == 3);
}

bool is_good_interval(const IntervalSpec& interval) { return is_good_interval(interval.a, interval.p); }

std::string to_string(const DegreeQuad& q) {
  return "(" + std::to_string(q.x) + "," + std::to_string(q.y) + "," + std::to_string(q.u) + "," +
         std::to_string(q.v) + ")";
}

std::optional<SignWitness> scan_f_sign(std::span<const std::uint64_t> degrees) {
  std::vector<std::uint64_t> set(degrees.begin(), degrees.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) throw std::invalid_argument("degree set is empty");
  if (set.front() == 0) throw std::invalid_argument("degrees must be positive");
  if (set.back() > UINT32_MAX) throw std::invalid_argument("degree too large for sign scan");

  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i; j < set.size(); ++j) pairs.emplace_back(set[i], set[j]);
  }
  // Pairs are generated in lexicographic order, so the first hit is the
  // lexicographically smallest (i, j, k, l); f's symmetries make it the
  // smallest over all orderings too.
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    auto [i, j] = pairs[s];
    for (std::size_t t = s + 1; t < pairs.size(); ++t) {
      auto [k, l] = pairs[t];
      if (interaction_sign(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l)) < 0) {
        return SignWitness{{i, j, k, l}, interaction(i, j, k, l)};
      }
    }
  }
  return std::nullopt;
}

std::optional<SignWitness> scan_f_sign(const IntervalSpec& interval) {
  if (interval.a == 0) throw std::invalid_argument("interval needs a >= 1");
  std::vector<std::uint64_t> set(interval.p + 1);
  std::iota(set.begin(), set.end(), interval.a);
  return scan_f_sign(set);
}

CollisionReport find_product_collisions(std::uint64_t a, std::uint64_t p) {
  return {CollisionReport::Kind::Product,
          collisions(a, p, [](const DegreeQuad& q) { return q.x * q.y == q.u * q.v; })};
}

Integer harmonic_discriminant(std::uint64_t x, std::uint64_t y, std::uint64_t u, std::uint64_t v) {
  return Integer(u + v) * x * y - Integer(x + y) * u * v;
}

CollisionReport find_harmonic_collisions(std::uint64_t a, std::uint64_t p) {
  return {CollisionReport::Kind::Harmonic, collisions(a, p, [](const DegreeQuad& q) {
            return harmonic_discriminant(q.x, q.y, q.u, q.v) == 0;
          })};
}

std::vector<DegreeQuad> predicted_harmonic_collisions(std::uint64_t a, std::uint64_t p) {
  if (p % 2 == 1 && p >= 3 && a == good_threshold(p)) {
    std::uint64_t mid = (p * p - 1) / 2;
    return {{a, a + p, mid, mid}};
  }
  return {};
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> endpoint_order_violations(std::uint64_t p) {
  std::uint64_t x = good_threshold(p);
  std::uint64_t y = x + p;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t u = x; u <= y; ++u) {
    for (std::uint64_t v = u; v <= y; ++v) {
      if (u == x && v == y) continue;
      bool larger_product = u * v > x * y;
      bool larger_sum = u + v >= x + y;
      if (larger_product != larger_sum) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string to_string(EqualityCase c) {
  switch (c) {
    case EqualityCase::RegularCase: return "RegularCase";
    case EqualityCase::BiregularClass1Case: return "BiregularClass1Case";
    case EqualityCase::MixedRegularBiregularCase: return "MixedRegularBiregularCase";
    case EqualityCase::StarsAndCyclesCase: return "StarsAndCyclesCase";
    case EqualityCase::NotEquality: return "NotEquality";
  }
  return "?";
}

EqualityCase parse_equality_case(const std::string& text) {
  for (auto c : {EqualityCase::RegularCase, EqualityCase::BiregularClass1Case,
                 EqualityCase::MixedRegularBiregularCase, EqualityCase::StarsAndCyclesCase,
                 EqualityCase::NotEquality}) {
    if (to_string(c) == text) return c;
  }
  throw std::invalid_argument("unknown equality case: " + text);
}

EqualityStructure classify_equality_structure(const Graph& g, const IntervalSpec& interval) {
  if (!is_good_interval(interval)) {
    throw std::invalid_argument("interval [" + std::to_string(interval.a) + ", " +
                                std::to_string(interval.upper()) + "] is not good");
  }
  if (g.order() == 0 || g.has_isolated_vertex()) {
    throw std::invalid_argument("equality structure needs a graph without isolated vertices");
  }
  auto degrees = degree_set(g);
  for (Degree d : degrees) {
    if (!interval.contains(d)) {
      throw std::invalid_argument("degree " + std::to_string(d) + " lies outside the interval");
    }
  }

  EqualityStructure out;
  for (const auto& vertices : connected_components(g)) {
    Graph c = induced_subgraph(g, vertices);
    ComponentSummary s;
    s.order = c.order();
    s.size = c.size();
    s.regularity = classify_regularity(c);
    s.is_star4 = is_star4(c);
    s.is_cycle = is_cycle(c);
    out.evidence.push_back(std::move(s));
  }

  using Kind = RegularityClass::Kind;
  auto all = [&](auto pred) { return std::all_of(out.evidence.begin(), out.evidence.end(), pred); };
  auto any = [&](auto pred) { return std::any_of(out.evidence.begin(), out.evidence.end(), pred); };

  if (degrees.size() == 1) {
    out.verdict = EqualityCase::RegularCase;
    return out;
  }
  if (degrees.size() == 2 && !edge_class_counts(g).has_diagonal()) {
    out.verdict = EqualityCase::BiregularClass1Case;
    return out;
  }
  if (degrees.size() == 3) {
    if (auto q = mixed_case_parameter(degrees[0], degrees[2])) {
      Degree low = degrees[0];
      Degree high = degrees[2];
      auto mid = static_cast<Degree>((*q * *q - 1) / 2);
      auto is_mid_regular = [&](const ComponentSummary& s) {
        return s.regularity.kind == Kind::Regular && s.regularity.degrees.front() == mid;
      };
      auto is_outer_biregular = [&](const ComponentSummary& s) {
        return s.regularity.kind == Kind::BiregularClass1 &&
               s.regularity.degrees == std::vector<Degree>{low, high};
      };
      if (degrees[1] == mid &&
          all([&](const ComponentSummary& s) { return is_mid_regular(s) || is_outer_biregular(s); }) &&
          any(is_mid_regular) && any(is_outer_biregular)) {
        out.verdict = EqualityCase::MixedRegularBiregularCase;
        return out;
      }
    }
    if (degrees == std::vector<Degree>{1, 2, 4} &&
        all([](const ComponentSummary& s) { return s.is_star4 || s.is_cycle; })) {
      out.verdict = EqualityCase::StarsAndCyclesCase;
      return out;
    }
  }
  out.verdict = EqualityCase::NotEquality;
  return out;
}

}  // namespace zagreb
