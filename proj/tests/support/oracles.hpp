#pragma once

// Independent reference implementations used only by the tests. They follow
// the textbook definitions directly and share no code with the library
// beyond Graph and Rational.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bugscope/graph.hpp"
#include "bugscope/rational.hpp"

namespace oracle {

using bugscope::BigInt;
using bugscope::Edge;
using bugscope::Graph;
using bugscope::Rational;
using bugscope::Vertex;

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

struct AllPairs {
  std::vector<std::vector<std::size_t>> dist;
  std::vector<std::vector<BigInt>> sigma;  // number of shortest paths
};

inline AllPairs all_pairs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  AllPairs ap;
  ap.dist.assign(n, std::vector<std::size_t>(n, kInf));
  ap.sigma.assign(n, std::vector<BigInt>(n, 0));
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> queue{s};
    ap.dist[s][s] = 0;
    ap.sigma[s][s] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      for (Vertex w : g.neighbors(v)) {
        if (ap.dist[s][w] == kInf) {
          ap.dist[s][w] = ap.dist[s][v] + 1;
          queue.push_back(w);
        }
        if (ap.dist[s][w] == ap.dist[s][v] + 1) ap.sigma[s][w] += ap.sigma[s][v];
      }
    }
  }
  return ap;
}

/// B(x) = Σ_{s<t} σ_sx σ_xt / σ_st over pairs with x on a shortest s-t path.
inline std::vector<Rational> pair_dependency_betweenness(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const AllPairs ap = all_pairs(g);
  std::vector<Rational> b(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        if (s == x || t == x || ap.dist[s][t] == kInf) continue;
        if (ap.dist[s][x] + ap.dist[x][t] != ap.dist[s][t]) continue;
        b[x] += Rational(ap.sigma[s][x] * ap.sigma[x][t], ap.sigma[s][t]);
      }
    }
  }
  return b;
}

inline bool connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

inline std::size_t diameter_or_inf(const Graph& g) {
  const AllPairs ap = all_pairs(g);
  std::size_t d = 0;
  for (const auto& row : ap.dist)
    for (std::size_t x : row) d = std::max(d, x);
  return d;
}

/// Smallest upper-triangle bit string over all relabellings, as a vector.
inline std::vector<bool> brute_canonical(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(n * (n - 1) / 2);
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) code.push_back(g.adjacent(perm[i], perm[j]));
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         brute_canonical(a) == brute_canonical(b);
}

/// Isomorphism classes of connected graphs on n vertices, by filtering every
/// labelled graph.
inline std::size_t count_connected_classes(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::set<std::vector<bool>> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i, ++bit)
        if (mask >> bit & 1) edges.emplace_back(i, j);
    const Graph g(n, edges);
    if (connected(g)) classes.insert(brute_canonical(g));
  }
  return classes.size();
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (connected(g)) return g;
  }
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertex_count(), edges);
}

/// v is close to xy when v is x, y, or adjacent to either.
inline bool close_to(const Graph& g, Vertex v, const Edge& e) {
  return v == e.u || v == e.v || g.adjacent(v, e.u) || g.adjacent(v, e.v);
}

/// coB(x) straight from the definition, in a host of n_total vertices.
inline std::vector<Rational> definitional_co_betweenness(const Graph& h, std::size_t n_total) {
  std::vector<Rational> weight;
  for (const Edge& e : h.edges()) {
    std::size_t close = 0;
    for (Vertex v = 0; v < h.vertex_count(); ++v) close += close_to(h, v, e);
    weight.push_back(Rational::fraction(1, static_cast<std::int64_t>(n_total - close)));
  }
  std::vector<Rational> cob(h.vertex_count());
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    // Edges close to x are the edges with an endpoint adjacent to x.
    for (std::size_t id = 0; id < h.edge_count(); ++id) {
      const Edge& e = h.edges()[id];
      if (h.adjacent(x, e.u) || h.adjacent(x, e.v)) cob[x] += weight[id];
    }
  }
  return cob;
}

/// Every component is K_{1,l} for one common l (isolated vertices are K_{1,0}).
inline bool equal_star_union(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> sizes;  // vertices, edges
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    std::vector<Vertex> stack{s};
    comp[s] = id;
    std::size_t vs = 0, deg_sum = 0, max_deg = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++vs;
      deg_sum += g.degree(v);
      max_deg = std::max(max_deg, g.degree(v));
      for (Vertex w : g.neighbors(v))
        if (comp[w] < 0) comp[w] = id, stack.push_back(w);
    }
    if (deg_sum / 2 != vs - 1 || max_deg != vs - 1) return false;
    sizes.emplace_back(vs, deg_sum / 2);
  }
  return std::all_of(sizes.begin(), sizes.end(), [&](const auto& s) { return s == sizes.front(); });
}

}  // namespace oracle
