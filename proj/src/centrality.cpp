#include "bugscope/centrality.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "bugscope/errors.hpp"

namespace bugscope {

namespace {

constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError();
}

}  // namespace

BetweennessProfile BetweennessProfile::from_values(std::vector<Rational> values) {
  BetweennessProfile p;
  Rational total;
  for (const Rational& v : values) total += v;
  if (!values.empty()) p.average = total / Rational(static_cast<std::int64_t>(values.size()));
  p.is_uniform = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
  p.per_vertex = std::move(values);
  return p;
}

BetweennessProfile betweenness_exact(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  std::vector<Rational> score(n);

  std::vector<std::size_t> dist(n);
  std::vector<BigInt> sigma(n);
  std::vector<Rational> delta(n);
  std::vector<Vertex> order;
  order.reserve(n);

  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    for (auto& c : sigma) c = 0;
    order.assign(1, s);
    dist[s] = 0;
    sigma[s] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex v = order[head];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Pull dependencies back from the farthest layer; predecessors of w are
    // its neighbours one layer closer to s.
    for (Vertex v : order) delta[v] = Rational();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex w = *it;
      if (w == s) continue;
      const Rational share = (Rational(1) + delta[w]) / Rational(BigInt(sigma[w]), BigInt(1));
      for (Vertex v : g.neighbors(w)) {
        if (dist[v] + 1 == dist[w]) delta[v] += Rational(sigma[v], BigInt(1)) * share;
      }
      score[w] += delta[w];
    }
  }
  // Each unordered pair was counted once from either end.
  const Rational half = Rational::fraction(1, 2);
  for (Rational& v : score) v *= half;
  return BetweennessProfile::from_values(std::move(score));
}

BetweennessProfile betweenness_oracle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kOracleMaxOrder) {
    throw UnsupportedSizeError("path-enumeration oracle supports at most " +
                               std::to_string(kOracleMaxOrder) + " vertices");
  }
  require_connected(g);
  std::vector<Rational> score(n);
  std::vector<std::uint64_t> inside(n);
  std::vector<Vertex> path;

  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      const auto to_t = bfs_distances(g, t);
      std::uint64_t paths = 0;
      std::fill(inside.begin(), inside.end(), 0);
      path.assign(1, s);
      // Depth-first walk that only steps strictly closer to t.
      auto walk = [&](auto&& self, Vertex v) -> void {
        if (v == t) {
          ++paths;
          for (std::size_t i = 1; i + 1 < path.size(); ++i) ++inside[path[i]];
          return;
        }
        for (Vertex w : g.neighbors(v)) {
          if (to_t[w] + 1 != to_t[v]) continue;
          path.push_back(w);
          self(self, w);
          path.pop_back();
        }
      };
      walk(walk, s);
      for (Vertex x = 0; x < n; ++x) {
        if (inside[x] != 0) {
          score[x] += Rational::fraction(static_cast<std::int64_t>(inside[x]),
                                         static_cast<std::int64_t>(paths));
        }
      }
    }
  }
  return BetweennessProfile::from_values(std::move(score));
}

BugVerdict is_bug(const Graph& g) {
  BetweennessProfile p = betweenness_exact(g);
  BugVerdict verdict;
  verdict.is_bug = p.is_uniform;
  if (p.is_uniform) verdict.value = p.average;
  return verdict;
}

}  // namespace bugscope
