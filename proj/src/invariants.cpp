#include "zagreb/invariants.hpp"

#include <stdexcept>
#include <vector>

namespace zagreb {

namespace {

void require_comparable(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("Zagreb comparison needs at least one edge");
  if (g.has_isolated_vertex()) throw std::invalid_argument("Zagreb comparison rejects isolated vertices");
}

}  // namespace

Integer first_zagreb(const Graph& g) {
  Integer sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::uint64_t d = g.degree(v);
    sum += d * d;
  }
  return sum;
}

Integer second_zagreb(const Graph& g) {
  Integer sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    std::uint64_t du = g.degree(u);
    for (Vertex v : g.neighbors(u)) {
      if (u < v) sum += du * g.degree(v);
    }
  }
  return sum;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictlyLess: return "StrictlyLess";
    case Verdict::Equal: return "Equal";
    case Verdict::StrictlyGreater: return "StrictlyGreater";
  }
  return "?";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "StrictlyLess") return Verdict::StrictlyLess;
  if (text == "Equal") return Verdict::Equal;
  if (text == "StrictlyGreater") return Verdict::StrictlyGreater;
  throw std::invalid_argument("unknown verdict: " + text);
}

ZagrebReport compare(const Graph& g) {
  require_comparable(g);
  ZagrebReport r;
  r.n = g.order();
  r.m = g.size();
  r.m1 = first_zagreb(g);
  r.m2 = second_zagreb(g);
  Integer lhs = r.m1 * r.m;  // M1/n ? M2/m  <=>  m*M1 ? n*M2
  Integer rhs = r.m2 * r.n;
  r.verdict = lhs < rhs ? Verdict::StrictlyLess : (lhs == rhs ? Verdict::Equal : Verdict::StrictlyGreater);
  return r;
}

Rational interaction(std::uint64_t i, std::uint64_t j, std::uint64_t k, std::uint64_t l) {
  if (i == 0 || j == 0 || k == 0 || l == 0) throw std::invalid_argument("interaction needs positive degrees");
  Integer ij = Integer(i) * j;
  Integer kl = Integer(k) * l;
  Integer num = (ij - kl) * (ij * (k + l) - kl * (i + j));
  return Rational(num, ij * kl);
}

int interaction_sign(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t l) {
  using wide = __int128;
  wide ij = wide(i) * j;
  wide kl = wide(k) * l;
  wide a = ij - kl;
  wide b = ij * (wide(k) + l) - kl * (wide(i) + j);
  int sa = (a > 0) - (a < 0);
  int sb = (b > 0) - (b < 0);
  return sa * sb;
}

Integer decomposition_sum(const EdgeClassCounts& counts) {
  std::vector<std::pair<DegreePair, std::uint64_t>> classes(counts.entries.begin(), counts.entries.end());
  Rational sum = 0;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    const auto& [ij, mij] = classes[a];
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      const auto& [kl, mkl] = classes[b];
      if (interaction_sign(ij.first, ij.second, kl.first, kl.second) == 0) continue;
      sum += interaction(ij.first, ij.second, kl.first, kl.second) * Integer(mij) * Integer(mkl);
    }
  }
  if (denominator(sum) != 1) {
    throw std::logic_error("decomposition sum is not integral: " + to_string(sum));
  }
  return numerator(sum);
}

Integer decomposition_sum(const Graph& g) {
  require_comparable(g);
  return decomposition_sum(edge_class_counts(g));
}

}  // namespace zagreb
