#include "zagreb/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace zagreb {

namespace {

constexpr std::size_t kSplitPairs = 6;

struct PairTable {
  std::size_t count = 0;
  std::array<Vertex, 28> u{};
  std::array<Vertex, 28> v{};

  explicit PairTable(std::size_t n) {
    for (Vertex b = 1; b < n; ++b) {
      for (Vertex a = 0; a < b; ++a) {
        u[count] = a;
        v[count] = b;
        ++count;
      }
    }
  }
};

bool connected_bits(std::size_t n, const std::array<std::uint16_t, kMaxEnumerationOrder>& adj) {
  if (n == 0) return true;
  std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
  std::uint16_t seen = 1;
  std::uint16_t frontier = 1;
  while (frontier != 0) {
    std::uint16_t next = 0;
    for (std::uint16_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

// Depth-first walk over the pair decisions, most significant pair first and
// "absent" before "present", so leaves come out in ascending mask order.
class Walker {
 public:
  Walker(const EnumerationSpec& spec, const std::function<void(AdjacencyMask)>& emit)
      : spec_(spec), pairs_(spec.n), emit_(emit) {
    remaining_.fill(0);
    degree_.fill(0);
    adj_.fill(0);
    for (std::size_t v = 0; v < spec.n; ++v) remaining_[v] = spec.n - 1;
  }

  // Applies the top `bits` decisions from `prefix` (MSB = highest pair).
  // Returns false if the prefix already violates a degree bound.
  bool apply_prefix(std::size_t prefix, std::size_t bits) {
    for (std::size_t j = 0; j < bits; ++j) {
      std::size_t k = pairs_.count - 1 - j;
      bool present = (prefix >> (bits - 1 - j)) & 1u;
      if (!decide(k, present)) return false;
    }
    undecided_ = pairs_.count - bits;
    return true;
  }

  void run() { walk(undecided_); }

 private:
  bool decide(std::size_t k, bool present) {
    Vertex a = pairs_.u[k];
    Vertex b = pairs_.v[k];
    --remaining_[a];
    --remaining_[b];
    if (present) {
      ++degree_[a];
      ++degree_[b];
      adj_[a] |= static_cast<std::uint16_t>(1u << b);
      adj_[b] |= static_cast<std::uint16_t>(1u << a);
      mask_ |= AdjacencyMask{1} << k;
      return degree_[a] <= spec_.max_degree && degree_[b] <= spec_.max_degree;
    }
    return degree_[a] + remaining_[a] >= spec_.min_degree && degree_[b] + remaining_[b] >= spec_.min_degree;
  }

  void undo(std::size_t k, bool present) {
    Vertex a = pairs_.u[k];
    Vertex b = pairs_.v[k];
    ++remaining_[a];
    ++remaining_[b];
    if (present) {
      --degree_[a];
      --degree_[b];
      adj_[a] &= static_cast<std::uint16_t>(~(1u << b));
      adj_[b] &= static_cast<std::uint16_t>(~(1u << a));
      mask_ &= ~(AdjacencyMask{1} << k);
    }
  }

  void walk(std::size_t undecided) {
    if (undecided == 0) {
      if (spec_.connected_only && !connected_bits(spec_.n, adj_)) return;
      if (spec_.dedup == Dedup::CanonicalForm && !is_canonical_mask(spec_.n, mask_)) return;
      emit_(mask_);
      return;
    }
    std::size_t k = undecided - 1;
    for (bool present : {false, true}) {
      if (decide(k, present)) walk(k);
      undo(k, present);
    }
  }

  const EnumerationSpec& spec_;
  PairTable pairs_;
  const std::function<void(AdjacencyMask)>& emit_;
  std::array<std::size_t, kMaxEnumerationOrder> remaining_{};
  std::array<std::size_t, kMaxEnumerationOrder> degree_{};
  std::array<std::uint16_t, kMaxEnumerationOrder> adj_{};
  AdjacencyMask mask_ = 0;
  std::size_t undecided_ = 0;
};

std::size_t split_bits(const EnumerationSpec& spec) {
  return std::min(kSplitPairs, spec.n * (spec.n - 1) / 2);
}

void run_partition(const EnumerationSpec& spec, std::size_t partition,
                   const std::function<void(AdjacencyMask)>& emit) {
  Walker walker(spec, emit);
  if (walker.apply_prefix(partition, split_bits(spec))) walker.run();
}

// Fast exact verdict for tiny graphs (n <= 8, so M1, M2 < 2^16).
Verdict small_verdict(std::size_t n, AdjacencyMask mask) {
  std::array<std::int64_t, kMaxEnumerationOrder> deg{};
  std::int64_t m = 0;
  PairTable pairs(n);
  for (std::size_t k = 0; k < pairs.count; ++k) {
    if ((mask >> k) & 1u) {
      ++deg[pairs.u[k]];
      ++deg[pairs.v[k]];
      ++m;
    }
  }
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  for (std::size_t v = 0; v < n; ++v) m1 += deg[v] * deg[v];
  for (std::size_t k = 0; k < pairs.count; ++k) {
    if ((mask >> k) & 1u) m2 += deg[pairs.u[k]] * deg[pairs.v[k]];
  }
  std::int64_t lhs = m * m1;
  std::int64_t rhs = static_cast<std::int64_t>(n) * m2;
  return lhs < rhs ? Verdict::StrictlyLess : (lhs == rhs ? Verdict::Equal : Verdict::StrictlyGreater);
}

}  // namespace

Graph graph_from_mask(std::size_t order, AdjacencyMask mask) {
  GraphBuilder b(order);
  std::size_t k = 0;
  for (Vertex v = 1; v < order; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      if ((mask >> k) & 1u) b.add_edge(u, v);
    }
  }
  if (k < 64 && (mask >> k) != 0) throw std::invalid_argument("mask has bits beyond the vertex pairs");
  return std::move(b).build();
}

AdjacencyMask mask_of(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("adjacency mask needs at most 11 vertices");
  AdjacencyMask mask = 0;
  for (const Edge& e : g.edges()) mask |= AdjacencyMask{1} << pair_index(e.u, e.v);
  return mask;
}

namespace {

template <typename OnPermuted>
void for_each_relabelling(std::size_t order, AdjacencyMask mask, OnPermuted on_permuted) {
  if (order > kMaxEnumerationOrder) throw std::invalid_argument("canonical form needs at most 8 vertices");
  std::vector<Edge> edges;
  PairTable pairs(order);
  for (std::size_t k = 0; k < pairs.count; ++k) {
    if ((mask >> k) & 1u) edges.push_back({pairs.u[k], pairs.v[k]});
  }
  std::array<Vertex, kMaxEnumerationOrder> perm{};
  std::iota(perm.begin(), perm.begin() + order, Vertex{0});
  while (std::next_permutation(perm.begin(), perm.begin() + order)) {
    AdjacencyMask permuted = 0;
    for (const Edge& e : edges) permuted |= AdjacencyMask{1} << pair_index(perm[e.u], perm[e.v]);
    if (!on_permuted(permuted)) return;
  }
}

}  // namespace

AdjacencyMask canonical_mask(const Graph& g) {
  AdjacencyMask original = mask_of(g);
  AdjacencyMask best = original;
  for_each_relabelling(g.order(), original, [&](AdjacencyMask m) {
    best = std::min(best, m);
    return true;
  });
  return best;
}

bool is_canonical_mask(std::size_t order, AdjacencyMask mask) {
  bool minimal = true;
  for_each_relabelling(order, mask, [&](AdjacencyMask m) {
    if (m < mask) minimal = false;
    return minimal;
  });
  return minimal;
}

void EnumerationSpec::validate() const {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                                ", got " + std::to_string(n));
  }
  if (min_degree > max_degree || max_degree > n - 1) {
    throw std::invalid_argument("enumeration needs 0 <= min_degree <= max_degree <= n-1");
  }
}

std::size_t worker_count() {
  if (const char* env = std::getenv("ZAGREB_THREADS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1) return static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_mask(const EnumerationSpec& spec, const std::function<void(AdjacencyMask)>& visitor) {
  spec.validate();
  std::size_t parts = partition_count(spec);
  for (std::size_t p = 0; p < parts; ++p) run_partition(spec, p, visitor);
}

void for_each_graph(const EnumerationSpec& spec, const std::function<void(const Graph&)>& visitor) {
  for_each_mask(spec, [&](AdjacencyMask mask) { visitor(graph_from_mask(spec.n, mask)); });
}

std::vector<Graph> enumerate(const EnumerationSpec& spec) {
  std::vector<Graph> out;
  for_each_graph(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::size_t partition_count(const EnumerationSpec& spec) { return std::size_t{1} << split_bits(spec); }

void visit_partitions(const EnumerationSpec& spec,
                      const std::function<void(std::size_t, AdjacencyMask)>& visitor, std::size_t threads) {
  spec.validate();
  std::size_t parts = partition_count(spec);
  threads = std::clamp<std::size_t>(threads, 1, parts);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t p = next++; p < parts; p = next++) {
      run_partition(spec, p, [&](AdjacencyMask mask) { visitor(p, mask); });
    }
  };
  if (threads == 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
}

std::vector<AdjacencyMask> enumerate_masks(const EnumerationSpec& spec, std::size_t threads) {
  spec.validate();
  std::vector<std::vector<AdjacencyMask>> buckets(partition_count(spec));
  visit_partitions(spec, [&](std::size_t p, AdjacencyMask mask) { buckets[p].push_back(mask); }, threads);
  std::vector<AdjacencyMask> out;
  for (auto& bucket : buckets) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<SurveyRow> survey_equality(const EnumerationSpec& spec, const std::optional<IntervalSpec>& interval) {
  spec.validate();
  if (spec.min_degree < 1) throw std::invalid_argument("survey needs min_degree >= 1");
  if (interval) {
    if (!is_good_interval(*interval)) throw std::invalid_argument("survey interval is not good");
    if (spec.min_degree < interval->a || spec.max_degree > interval->upper()) {
      throw std::invalid_argument("degree bounds must lie inside the survey interval");
    }
  }

  std::vector<std::vector<SurveyRow>> buckets(partition_count(spec));
  visit_partitions(spec, [&](std::size_t p, AdjacencyMask mask) {
    Graph g = graph_from_mask(spec.n, mask);
    SurveyRow row;
    row.n = spec.n;
    row.mask = mask;
    row.verdict = compare(g).verdict;
    if (interval) {
      row.interval = interval;
    } else {
      auto degrees = degree_set(g);
      IntervalSpec span{degrees.front(), degrees.back() - degrees.front()};
      if (is_good_interval(span)) row.interval = span;
    }
    if (row.interval) {
      row.structure = classify_equality_structure(g, *row.interval).verdict;
      row.agreement = (row.verdict == Verdict::Equal) == (*row.structure != EqualityCase::NotEquality);
    }
    buckets[p].push_back(std::move(row));
  });

  std::vector<SurveyRow> out;
  for (auto& bucket : buckets) {
    std::move(bucket.begin(), bucket.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Graph> counterexample_search(std::size_t n_max) {
  if (n_max > kMaxEnumerationOrder) {
    throw std::invalid_argument("counterexample search needs n_max <= " + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= n_max; ++n) {
    EnumerationSpec spec{n, 1, n - 1, true, Dedup::None};
    std::vector<std::vector<AdjacencyMask>> buckets(partition_count(spec));
    visit_partitions(spec, [&](std::size_t p, AdjacencyMask mask) {
      if (small_verdict(n, mask) == Verdict::StrictlyGreater && is_canonical_mask(n, mask)) {
        buckets[p].push_back(mask);
      }
    });
    for (const auto& bucket : buckets) {
      for (AdjacencyMask mask : bucket) {
        Graph g = graph_from_mask(n, mask);
        if (compare(g).verdict != Verdict::StrictlyGreater) {
          throw std::logic_error("fast and exact verdicts disagree on a counterexample candidate");
        }
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace zagreb
