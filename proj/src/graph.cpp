#include "bugscope/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bugscope/errors.hpp"

namespace bugscope {

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n) {
      throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw PreconditionError("repeated edge {" + std::to_string(dup->u) + "," +
                            std::to_string(dup->v) + "}");
  }

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_id(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) edges.emplace_back(a, static_cast<Vertex>((a + 1) % n));
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= leaves; ++leaf) edges.emplace_back(0, leaf);
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_multipartite(std::span<const std::size_t> part_sizes) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) part_of.insert(part_of.end(), part_sizes[p], p);
  const std::size_t n = part_of.size();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2 - g.edge_count());
  for (Vertex a = 0; a < n; ++a) {
    auto nb = g.neighbors(a);
    auto it = std::upper_bound(nb.begin(), nb.end(), a);
    for (Vertex b = a + 1; b < n; ++b) {
      if (it != nb.end() && *it == b) {
        ++it;
        continue;
      }
      edges.emplace_back(a, b);
    }
  }
  return Graph(n, std::move(edges));
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  std::size_t m = 0;
  for (const Graph& p : parts) {
    n += p.vertex_count();
    m += p.edge_count();
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  Vertex shift = 0;
  for (const Graph& p : parts) {
    for (const Edge& e : p.edges()) edges.emplace_back(e.u + shift, e.v + shift);
    shift += static_cast<Vertex>(p.vertex_count());
  }
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return disjoint_union(parts);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::size_t> index(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const std::size_t j = index[w];
      if (j != std::numeric_limits<std::size_t>::max() && i < j) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(vertices.size(), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw PreconditionError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertex_count(), std::move(edges));
}

Graph inflate(const Graph& h, std::size_t k) {
  if (k == 0) throw PreconditionError("inflation factor must be positive");
  const std::size_t n = h.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(n * k * (k - 1) / 2 + h.edge_count() * k * k);
  const auto label = [k](Vertex x, std::size_t i) { return static_cast<Vertex>(x * k + i); };
  for (Vertex x = 0; x < n; ++x)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) edges.emplace_back(label(x, i), label(x, j));
  for (const Edge& e : h.edges())
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) edges.emplace_back(label(e.u, i), label(e.v, j));
  return Graph(n * k, std::move(edges));
}

std::optional<std::size_t> ComponentInventory::uniform_star() const {
  std::optional<std::size_t> common;
  for (const Component& c : components) {
    if (!c.star) return std::nullopt;
    if (common && *common != *c.star) return std::nullopt;
    common = c.star;
  }
  return common;
}

ComponentInventory connected_components(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.vertex_count();
  ComponentInventory inv;
  inv.component_of.assign(n, unset);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (inv.component_of[root] != unset) continue;
    const std::size_t id = inv.components.size();
    Component comp;
    queue.assign(1, root);
    inv.component_of[root] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (inv.component_of[w] == unset) {
          inv.component_of[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    std::size_t degree_sum = 0;
    std::size_t max_deg = 0;
    for (Vertex v : queue) {
      degree_sum += g.degree(v);
      max_deg = std::max(max_deg, g.degree(v));
    }
    comp.edge_count = degree_sum / 2;
    const std::size_t l = queue.size() - 1;
    if (comp.edge_count == l && max_deg == l) comp.star = l;
    comp.vertices = queue;
    inv.components.push_back(std::move(comp));
  }
  return inv;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

bool is_star(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n >= 1 && g.edge_count() == n - 1 && g.max_degree() == n - 1;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Diameter diameter(const Graph& g) {
  if (g.vertex_count() == 0) return Diameter::infinite();
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return Diameter::infinite();
      best = std::max(best, d);
    }
  }
  return Diameter::finite(best);
}

std::optional<Edge> spanning_double_star(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> covered(n);
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) + g.degree(e.v) < n) continue;
    std::fill(covered.begin(), covered.end(), 0);
    std::size_t count = 0;
    for (Vertex end : {e.u, e.v}) {
      for (Vertex w : g.neighbors(end)) {
        if (!covered[w]) {
          covered[w] = 1;
          ++count;
        }
      }
    }
    // e.u and e.v are each other's neighbours, so both are already covered.
    if (count == n) return e;
  }
  return std::nullopt;
}

}  // namespace bugscope
