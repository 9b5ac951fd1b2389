#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zagreb {

using Vertex = std::uint32_t;
using Degree = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and symmetric; a Graph is immutable once built.
/// Use from_edges() for untrusted input (it rejects self-loops, duplicate
/// pairs and out-of-range endpoints) or GraphBuilder for incremental
/// construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order) : adjacency_(order) {}

  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  Degree degree(Vertex v) const { return static_cast<Degree>(adjacency_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_isolated_vertex() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Mutable construction helper. Every mutation is checked; errors are
/// std::invalid_argument.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order = 0) : adjacency_(order) {}

  Vertex add_vertex();
  Vertex add_vertices(std::size_t count);  // returns the first new index
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t order() const { return adjacency_.size(); }
  Graph build() &&;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Generators. Each throws std::invalid_argument below its minimum parameter.
Graph complete(std::size_t p);                         // p >= 1
Graph cycle(std::size_t p);                            // p >= 3
Graph path(std::size_t p);                             // p >= 1, p vertices
Graph star(std::size_t k);                             // K_{1,k}, k >= 1
Graph complete_bipartite(std::size_t a, std::size_t b);  // a, b >= 1
/// r-regular circulant graph on p vertices (r < p, r*p even).
Graph regular_circulant(std::size_t p, std::size_t r);
/// H's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

std::vector<Degree> degree_sequence(const Graph& g);
/// Sorted distinct degrees, D(G).
std::vector<Degree> degree_set(const Graph& g);

using DegreePair = std::pair<Degree, Degree>;  // first <= second

/// Number of edges m_{i,j} joining a degree-i vertex to a degree-j vertex.
struct EdgeClassCounts {
  std::map<DegreePair, std::uint64_t> entries;

  std::uint64_t count(Degree i, Degree j) const;
  std::uint64_t total() const;
  bool has_diagonal() const;

  friend bool operator==(const EdgeClassCounts&, const EdgeClassCounts&) = default;
};

EdgeClassCounts edge_class_counts(const Graph& g);

struct RegularityClass {
  enum class Kind { Regular, BiregularClass1, BiregularClass2, TriregularClass1, TriregularClass2, Other };

  Kind kind = Kind::Regular;
  std::vector<Degree> degrees;  // the distinct degrees, ascending

  bool is_class1() const { return kind == Kind::BiregularClass1 || kind == Kind::TriregularClass1; }
  friend bool operator==(const RegularityClass&, const RegularityClass&) = default;
};

/// "Regular(2)", "BiregularClass1(3,4)", "Other(2,3,5,6)".
std::string to_string(const RegularityClass& rc);

/// Edgeless graphs (including n = 1) are Regular(0).
RegularityClass classify_regularity(const Graph& g);

/// S(G): a new degree-2 vertex on every edge. New vertices are numbered
/// n, n+1, ... in the order of g.edges().
Graph subdivision(const Graph& g);

bool is_connected(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Induced subgraph on `vertices` (relabelled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace zagreb
