#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/intervals.hpp"
#include "zagreb/invariants.hpp"

namespace zagreb {

/// Largest vertex count the enumerator accepts.
inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Upper-triangle adjacency bitmask. Bit v(v-1)/2 + u stands for the pair
/// (u, v), u < v; this is the graph6 bit order.
using AdjacencyMask = std::uint64_t;

inline constexpr std::size_t pair_index(Vertex u, Vertex v) {
  return u < v ? std::size_t(v) * (v - 1) / 2 + u : std::size_t(u) * (u - 1) / 2 + v;
}

Graph graph_from_mask(std::size_t order, AdjacencyMask mask);
/// Needs order <= 11 so that every pair fits in 64 bits.
AdjacencyMask mask_of(const Graph& g);

/// Smallest mask over all relabellings of g. Needs order <= kMaxEnumerationOrder.
AdjacencyMask canonical_mask(const Graph& g);
/// True iff no relabelling of the graph has a smaller mask.
bool is_canonical_mask(std::size_t order, AdjacencyMask mask);

enum class Dedup { None, CanonicalForm };

struct EnumerationSpec {
  std::size_t n = 1;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool connected_only = false;
  Dedup dedup = Dedup::None;

  /// Throws std::invalid_argument on a bad spec (n out of [1, cap],
  /// degree bounds not within 0 <= min <= max <= n-1).
  void validate() const;
};

/// Worker count from ZAGREB_THREADS, else the hardware concurrency.
std::size_t worker_count();

/// Visits every matching mask exactly once in ascending order.
void for_each_mask(const EnumerationSpec& spec, const std::function<void(AdjacencyMask)>& visitor);
void for_each_graph(const EnumerationSpec& spec, const std::function<void(const Graph&)>& visitor);
std::vector<Graph> enumerate(const EnumerationSpec& spec);

/// The mask space split into ascending contiguous partitions.
std::size_t partition_count(const EnumerationSpec& spec);

/// Calls visitor(partition, mask) for every matching mask. Partitions run on
/// up to `threads` workers; within a partition masks arrive in ascending
/// order. Concatenating per-partition results in partition order therefore
/// reproduces the sequential stream.
void visit_partitions(const EnumerationSpec& spec,
                      const std::function<void(std::size_t, AdjacencyMask)>& visitor,
                      std::size_t threads = worker_count());

std::vector<AdjacencyMask> enumerate_masks(const EnumerationSpec& spec, std::size_t threads = worker_count());

struct SurveyRow {
  std::size_t n = 0;
  AdjacencyMask mask = 0;
  Verdict verdict = Verdict::Equal;
  std::optional<IntervalSpec> interval;  // the good interval used for classification
  std::optional<EqualityCase> structure;
  bool agreement = true;  // (verdict == Equal) == (structure != NotEquality)

  Graph graph() const { return graph_from_mask(n, mask); }
};

/// Compares every enumerated graph and, where a good interval applies,
/// classifies its equality structure. Without `interval` each graph is
/// classified against its own degree span [min D, max D] when that span is
/// good. Needs spec.min_degree >= 1; an interval must be good and contain
/// the degree bounds.
std::vector<SurveyRow> survey_equality(const EnumerationSpec& spec,
                                       const std::optional<IntervalSpec>& interval = std::nullopt);

/// Connected graphs (one per isomorphism class, canonical labelling) with
/// 2 <= n <= n_max and M1/n > M2/m.
std::vector<Graph> counterexample_search(std::size_t n_max);

}  // namespace zagreb
