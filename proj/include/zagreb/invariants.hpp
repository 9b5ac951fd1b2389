#pragma once

#include <cstdint>
#include <string>

#include "zagreb/graph.hpp"
#include "zagreb/numeric.hpp"

namespace zagreb {

/// Sum of squared degrees.
Integer first_zagreb(const Graph& g);
/// Sum over edges of the product of endpoint degrees.
Integer second_zagreb(const Graph& g);

enum class Verdict { StrictlyLess, Equal, StrictlyGreater };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

/// Outcome of comparing M1/n against M2/m. The verdict reads left to right:
/// StrictlyGreater means M1/n > M2/m, i.e. the Zagreb inequality fails.
struct ZagrebReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Integer m1;
  Integer m2;
  Verdict verdict = Verdict::Equal;

  Rational first_ratio() const { return Rational(m1, Integer(n)); }
  Rational second_ratio() const { return Rational(m2, Integer(m)); }
};

/// Decides M1/n vs M2/m by comparing the integers m*M1 and n*M2.
/// Throws std::invalid_argument for edgeless graphs and graphs with an
/// isolated vertex.
ZagrebReport compare(const Graph& g);

/// Pairwise edge-class interaction term
///   f(i,j,k,l) = (ij - kl) * (ij(k+l) - kl(i+j)) / (ijkl).
/// Throws std::invalid_argument if any argument is zero.
Rational interaction(std::uint64_t i, std::uint64_t j, std::uint64_t k, std::uint64_t l);

/// Sign of interaction(i,j,k,l) without building the fraction (-1, 0, 1).
int interaction_sign(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t l);

/// Sum of f(i,j,k,l) m_{i,j} m_{k,l} over unordered pairs of distinct degree
/// classes. Diagonal terms vanish and are skipped. The result equals
/// n*M2 - m*M1; a non-integral sum throws std::logic_error.
/// Same preconditions as compare().
Integer decomposition_sum(const Graph& g);
Integer decomposition_sum(const EdgeClassCounts& counts);

}  // namespace zagreb
