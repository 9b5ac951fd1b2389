#include "zagreb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zagreb {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  GraphBuilder builder(order);
  for (const Edge& e : edges) builder.add_edge(e.u, e.v);
  return std::move(builder).build();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& nbrs) { return nbrs.empty(); });
}

Vertex GraphBuilder::add_vertex() { return add_vertices(1); }

Vertex GraphBuilder::add_vertices(std::size_t count) {
  auto first = static_cast<Vertex>(adjacency_.size());
  adjacency_.resize(adjacency_.size() + count);
  return first;
}

void GraphBuilder::check_vertex(Vertex v) const {
  if (v >= adjacency_.size()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(adjacency_.size()) + ")");
  }
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  const auto& nbrs = adjacency_[u];
  return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge " + edge_text(u, v));
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto& nu = adjacency_[u];
  auto& nv = adjacency_[v];
  auto iu = std::find(nu.begin(), nu.end(), v);
  if (iu == nu.end()) throw std::invalid_argument("no edge " + edge_text(u, v));
  nu.erase(iu);
  nv.erase(std::find(nv.begin(), nv.end(), u));
  --edge_count_;
}

Graph GraphBuilder::build() && {
  Graph g;
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.adjacency_ = std::move(adjacency_);
  g.edge_count_ = edge_count_;
  adjacency_.clear();
  edge_count_ = 0;
  return g;
}

Graph complete(std::size_t p) {
  if (p < 1) throw std::invalid_argument("complete graph needs p >= 1");
  GraphBuilder b(p);
  for (Vertex u = 0; u < p; ++u) {
    for (Vertex v = u + 1; v < p; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph cycle(std::size_t p) {
  if (p < 3) throw std::invalid_argument("cycle needs p >= 3");
  GraphBuilder b(p);
  for (Vertex v = 0; v < p; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % p));
  return std::move(b).build();
}

Graph path(std::size_t p) {
  if (p < 1) throw std::invalid_argument("path needs p >= 1");
  GraphBuilder b(p);
  for (Vertex v = 0; v + 1 < p; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph star(std::size_t k) {
  if (k < 1) throw std::invalid_argument("star needs k >= 1");
  return complete_bipartite(1, k);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite graph needs a, b >= 1");
  GraphBuilder builder(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) builder.add_edge(u, static_cast<Vertex>(a + v));
  }
  return std::move(builder).build();
}

Graph regular_circulant(std::size_t p, std::size_t r) {
  if (r >= p || (r * p) % 2 != 0) {
    throw std::invalid_argument("no " + std::to_string(r) + "-regular circulant on " + std::to_string(p) +
                                " vertices");
  }
  GraphBuilder b(p);
  for (std::size_t offset = 1; offset <= r / 2; ++offset) {
    for (Vertex v = 0; v < p; ++v) b.add_edge(v, static_cast<Vertex>((v + offset) % p));
  }
  if (r % 2 == 1) {
    // p is even here; join antipodes.
    for (Vertex v = 0; v < p / 2; ++v) b.add_edge(v, static_cast<Vertex>(v + p / 2));
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  auto offset = static_cast<Vertex>(g.order());
  for (const Edge& e : h.edges()) b.add_edge(e.u + offset, e.v + offset);
  return std::move(b).build();
}

std::vector<Degree> degree_sequence(const Graph& g) {
  std::vector<Degree> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  return out;
}

std::vector<Degree> degree_set(const Graph& g) {
  auto out = degree_sequence(g);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t EdgeClassCounts::count(Degree i, Degree j) const {
  auto it = entries.find({std::min(i, j), std::max(i, j)});
  return it == entries.end() ? 0 : it->second;
}

std::uint64_t EdgeClassCounts::total() const {
  std::uint64_t sum = 0;
  for (const auto& [pair, count] : entries) sum += count;
  return sum;
}

bool EdgeClassCounts::has_diagonal() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const auto& kv) { return kv.first.first == kv.first.second && kv.second > 0; });
}

EdgeClassCounts edge_class_counts(const Graph& g) {
  EdgeClassCounts out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u > v) continue;
      Degree du = g.degree(u);
      Degree dv = g.degree(v);
      ++out.entries[{std::min(du, dv), std::max(du, dv)}];
    }
  }
  return out;
}

std::string to_string(const RegularityClass& rc) {
  std::string name;
  switch (rc.kind) {
    case RegularityClass::Kind::Regular: name = "Regular"; break;
    case RegularityClass::Kind::BiregularClass1: name = "BiregularClass1"; break;
    case RegularityClass::Kind::BiregularClass2: name = "BiregularClass2"; break;
    case RegularityClass::Kind::TriregularClass1: name = "TriregularClass1"; break;
    case RegularityClass::Kind::TriregularClass2: name = "TriregularClass2"; break;
    case RegularityClass::Kind::Other: name = "Other"; break;
  }
  name += "(";
  for (std::size_t i = 0; i < rc.degrees.size(); ++i) {
    if (i > 0) name += ",";
    name += std::to_string(rc.degrees[i]);
  }
  return name + ")";
}

RegularityClass classify_regularity(const Graph& g) {
  using Kind = RegularityClass::Kind;
  RegularityClass rc;
  rc.degrees = degree_set(g);
  if (rc.degrees.empty()) rc.degrees = {0};

  bool equal_degree_edge = false;
  for (Vertex u = 0; u < g.order() && !equal_degree_edge; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (g.degree(u) == g.degree(v)) {
        equal_degree_edge = true;
        break;
      }
    }
  }

  switch (rc.degrees.size()) {
    case 1: rc.kind = Kind::Regular; break;
    case 2: rc.kind = equal_degree_edge ? Kind::BiregularClass2 : Kind::BiregularClass1; break;
    case 3: rc.kind = equal_degree_edge ? Kind::TriregularClass2 : Kind::TriregularClass1; break;
    default: rc.kind = Kind::Other; break;
  }
  return rc;
}

Graph subdivision(const Graph& g) {
  auto edges = g.edges();
  GraphBuilder b(g.order() + edges.size());
  auto next = static_cast<Vertex>(g.order());
  for (const Edge& e : edges) {
    b.add_edge(e.u, next);
    b.add_edge(next, e.v);
    ++next;
  }
  return std::move(b).build();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> component;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
  GraphBuilder b(vertices.size());
  for (Vertex u : vertices) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && index[v] != static_cast<Vertex>(-1)) b.add_edge(index[u], index[v]);
    }
  }
  return std::move(b).build();
}

}  // namespace zagreb
