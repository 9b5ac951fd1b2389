#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/numeric.hpp"

namespace zagreb {

/// Integer interval [a, a + p].
struct IntervalSpec {
  std::uint64_t a = 1;
  std::uint64_t p = 0;

  std::uint64_t upper() const { return a + p; }
  /// a >= p(p-1)/2, evaluated as 2a >= p(p-1).
  bool meets_threshold() const { return 2 * a >= p * (p == 0 ? 0 : p - 1); }
  bool contains(std::uint64_t d) const { return d >= a && d <= upper(); }

  friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

/// p(p-1)/2, the smallest left endpoint for which [a, a+p] is good.
std::uint64_t good_threshold(std::uint64_t p);

/// Goodness of [a, a+p]: a >= p(p-1)/2, or the interval is [1, 4].
/// Throws std::invalid_argument for a = 0.
bool is_good_interval(std::uint64_t a, std::uint64_t p);
bool is_good_interval(const IntervalSpec& interval);

/// Four degrees (x, y, u, v) with x <= y, u <= v and (x, y) < (u, v).
struct DegreeQuad {
  std::uint64_t x, y, u, v;

  friend auto operator<=>(const DegreeQuad&, const DegreeQuad&) = default;
};

std::string to_string(const DegreeQuad& q);

struct CollisionReport {
  enum class Kind { Product, Harmonic };

  Kind kind = Kind::Product;
  std::vector<DegreeQuad> tuples;  // ascending
};

/// Smallest quadruple (i, j, k, l) over `degrees` with f(i,j,k,l) < 0.
struct SignWitness {
  DegreeQuad quad;
  Rational value;
};

/// Exhaustive search for a negative f value over the degree set. An empty
/// result certifies that every graph with degrees in the set satisfies the
/// Zagreb inequality.
std::optional<SignWitness> scan_f_sign(std::span<const std::uint64_t> degrees);
std::optional<SignWitness> scan_f_sign(const IntervalSpec& interval);

/// All pairs (x,y) != (u,v) in [a, a+p] with xy = uv.
CollisionReport find_product_collisions(std::uint64_t a, std::uint64_t p);

/// (u+v)xy - (x+y)uv; zero iff (x+y)/xy = (u+v)/uv.
Integer harmonic_discriminant(std::uint64_t x, std::uint64_t y, std::uint64_t u, std::uint64_t v);

/// All pairs (x,y) != (u,v) in [a, a+p] with (x+y)/xy = (u+v)/uv.
CollisionReport find_harmonic_collisions(std::uint64_t a, std::uint64_t p);

/// The collision set predicted at a >= p(p-1)/2: for odd p and
/// a = p(p-1)/2 the single tuple (p(p-1)/2, p(p+1)/2, (p²-1)/2, (p²-1)/2),
/// otherwise nothing.
std::vector<DegreeQuad> predicted_harmonic_collisions(std::uint64_t a, std::uint64_t p);

/// With x = p(p-1)/2 and y = x + p, lists every unordered {u, v} inside
/// [x, y] other than {x, y} itself for which "uv > xy iff u + v >= x + y"
/// fails. Expected to be empty for every p >= 1.
std::vector<std::pair<std::uint64_t, std::uint64_t>> endpoint_order_violations(std::uint64_t p);

enum class EqualityCase {
  RegularCase,
  BiregularClass1Case,
  MixedRegularBiregularCase,
  StarsAndCyclesCase,
  NotEquality,
};

std::string to_string(EqualityCase c);
EqualityCase parse_equality_case(const std::string& text);

struct ComponentSummary {
  std::size_t order = 0;
  std::size_t size = 0;
  RegularityClass regularity;
  bool is_star4 = false;  // K_{1,4}
  bool is_cycle = false;

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

struct EqualityStructure {
  EqualityCase verdict = EqualityCase::NotEquality;
  std::vector<ComponentSummary> evidence;  // one per connected component
};

/// Structural equality test for graphs whose degrees lie in a good interval.
///
/// The graph satisfies M1/n = M2/m exactly when it is one of:
///   - regular, all components sharing the degree;
///   - biregular of class 1 with a single degree pair;
///   - for odd p', the union of ((p'²-1)/2)-regular components with class-1
///     biregular components on degrees p'(p'-1)/2 and p'(p'+1)/2;
///   - the union of K_{1,4} stars and cycles.
/// Cases are tried in that order. Throws std::invalid_argument if the
/// interval is not good, a degree falls outside it, or a vertex is isolated.
EqualityStructure classify_equality_structure(const Graph& g, const IntervalSpec& interval);

}  // namespace zagreb
