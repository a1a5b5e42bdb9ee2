#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bugscope {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on the vertices 0..n-1.
///
/// Immutable once built. Adjacency is kept in CSR form with every neighbour
/// list sorted ascending; the edge list is sorted lexicographically and an
/// edge's position in it is its id throughout the library.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws PreconditionError on self-loops, repeated pairs or labels >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool adjacent(Vertex a, Vertex b) const;

  const std::vector<Edge>& edges() const { return edges_; }
  /// Position of {a,b} in edges(), if present.
  std::optional<std::size_t> edge_id(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
};

// --- named graphs -----------------------------------------------------------

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Requires n >= 3.
Graph cycle_graph(std::size_t n);
/// K_{1,leaves}: vertex 0 is the centre.
Graph star_graph(std::size_t leaves);
/// Parts are consecutive label blocks in the given order.
Graph complete_multipartite(std::span<const std::size_t> part_sizes);
Graph petersen_graph();

// --- structure ---------------------------------------------------------------

Graph complement(const Graph& g);
/// Components of the operands are concatenated in argument order.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Subgraph induced by `vertices`, relabelled 0.. in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// k-fold inflation: vertex x becomes the clique x*k .. x*k+k-1 and every edge
/// becomes a complete join of the two cliques. Requires k >= 1.
Graph inflate(const Graph& h, std::size_t k);

struct Component {
  std::vector<Vertex> vertices;  // ascending
  std::size_t edge_count = 0;
  std::optional<std::size_t> star;  // l when the component is K_{1,l}
};

/// Components ordered by their smallest vertex.
struct ComponentInventory {
  std::vector<Component> components;
  std::vector<std::size_t> component_of;  // vertex -> index into components

  /// l when every component is K_{1,l} for one common l.
  std::optional<std::size_t> uniform_star() const;
};

ComponentInventory connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// True iff g is isomorphic to K_{1,l} for some l >= 0 (K_1 and K_2 included).
bool is_star(const Graph& g);

/// Graph diameter; disconnected graphs (and the empty graph) have an infinite
/// diameter, which has no integer representation.
class Diameter {
 public:
  static Diameter infinite() { return Diameter(); }
  static Diameter finite(std::size_t d) { return Diameter(d); }

  bool is_finite() const { return value_.has_value(); }
  std::size_t value() const { return value_.value(); }
  /// False for the infinite diameter.
  bool at_most(std::size_t d) const { return value_ && *value_ <= d; }

  friend bool operator==(const Diameter&, const Diameter&) = default;

 private:
  Diameter() = default;
  explicit Diameter(std::size_t d) : value_(d) {}
  std::optional<std::size_t> value_;
};

/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
Diameter diameter(const Graph& g);

/// An edge {a,b} with N[a] ∪ N[b] = V(g), i.e. the centres of a spanning
/// double star. The lexicographically first such edge is returned.
std::optional<Edge> spanning_double_star(const Graph& g);
inline bool has_spanning_double_star(const Graph& g) {
  return spanning_double_star(g).has_value();
}

}  // namespace bugscope
