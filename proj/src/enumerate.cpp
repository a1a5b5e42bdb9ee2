#include "bugscope/enumerate.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <string>

#include "bugscope/errors.hpp"

namespace bugscope {

namespace {

constexpr std::size_t kMaxCodeOrder = 11;

struct Rows {
  std::size_t n = 0;
  std::array<std::uint16_t, 16> adj{};

  bool has(std::size_t a, std::size_t b) const { return (adj[a] >> b) & 1u; }
  void link(std::size_t a, std::size_t b) {
    adj[a] |= static_cast<std::uint16_t>(1u << b);
    adj[b] |= static_cast<std::uint16_t>(1u << a);
  }
};

Rows rows_of(const Graph& g) {
  if (g.vertex_count() > kMaxCodeOrder) {
    throw UnsupportedSizeError("adjacency codes support at most " + std::to_string(kMaxCodeOrder) +
                               " vertices");
  }
  Rows r;
  r.n = g.vertex_count();
  for (const Edge& e : g.edges()) r.link(e.u, e.v);
  return r;
}

/// Column j of the code under `order` (position -> vertex): bit for row 0 is
/// the most significant.
std::uint64_t column(const Rows& r, const std::size_t* order, std::size_t j) {
  std::uint64_t col = 0;
  for (std::size_t i = 0; i < j; ++i) col = (col << 1) | (r.has(order[i], order[j]) ? 1u : 0u);
  return col;
}

std::uint64_t code_of(const Rows& r, const std::size_t* order) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < r.n; ++j) code = (code << j) | column(r, order, j);
  return code;
}

/// Branch-and-bound over position assignments. `cell_of_position[j]` names
/// the colour class that position j must be filled from.
class MinCodeSearch {
 public:
  MinCodeSearch(const Rows& rows, std::vector<int> colour, std::vector<int> cell_of_position)
      : r_(rows), colour_(std::move(colour)), cell_of_position_(std::move(cell_of_position)) {}

  std::uint64_t run() {
    have_best_ = false;
    used_ = 0;
    descend(0, true);
    return best_code_;
  }

 private:
  void descend(std::size_t j, bool tied) {
    if (j == r_.n) {
      const std::uint64_t code = code_of(r_, order_.data());
      if (!have_best_ || code < best_code_) {
        best_code_ = code;
        std::copy(cur_.begin(), cur_.end(), best_col_.begin());
        have_best_ = true;
        ++updates_;
      }
      return;
    }
    for (std::size_t v = 0; v < r_.n; ++v) {
      if ((used_ >> v) & 1u) continue;
      if (colour_[v] != cell_of_position_[j]) continue;
      order_[j] = v;
      const std::uint64_t col = column(r_, order_.data(), j);
      bool next_tied = false;
      if (have_best_ && tied) {
        if (col > best_col_[j]) continue;
        next_tied = col == best_col_[j];
      }
      cur_[j] = col;
      used_ |= 1u << v;
      const std::size_t before = updates_;
      descend(j + 1, next_tied);
      used_ &= ~(1u << v);
      // A new best found below shares this node's prefix.
      if (updates_ != before) tied = true;
    }
  }

  const Rows& r_;
  std::vector<int> colour_;
  std::vector<int> cell_of_position_;
  std::array<std::size_t, 16> order_{};
  std::array<std::uint64_t, 16> cur_{};
  std::array<std::uint64_t, 16> best_col_{};
  std::uint64_t best_code_ = 0;
  bool have_best_ = false;
  std::size_t updates_ = 0;
  unsigned used_ = 0;
};

/// Stable colour refinement starting from degrees. Colours are ranks of
/// isomorphism-invariant signatures, so the partition is canonical.
std::vector<int> refine_colours(const Rows& r) {
  const std::size_t n = r.n;
  std::vector<int> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = __builtin_popcount(r.adj[v]);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> around;
      for (std::size_t w = 0; w < n; ++w)
        if (r.has(v, w)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                   distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

std::uint64_t canonical_exhaustive(const Rows& r) {
  std::array<std::size_t, 16> order{};
  std::iota(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(r.n), std::size_t{0});
  std::uint64_t best = code_of(r, order.data());
  while (std::next_permutation(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(r.n))) {
    best = std::min(best, code_of(r, order.data()));
  }
  return best;
}

std::uint64_t canonical_refined(const Rows& r) {
  std::vector<int> colour = refine_colours(r);
  std::vector<int> cells(colour);
  std::sort(cells.begin(), cells.end());
  return MinCodeSearch(r, std::move(colour), std::move(cells)).run();
}

Rows rows_from_code(std::size_t n, std::uint64_t code) {
  Rows r;
  r.n = n;
  std::size_t bit = n * (n > 0 ? n - 1 : 0) / 2;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1u) r.link(i, j);
    }
  }
  return r;
}

Graph graph_of(const Rows& r) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < r.n; ++a)
    for (std::size_t b = a + 1; b < r.n; ++b)
      if (r.has(a, b)) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return Graph(r.n, std::move(edges));
}

/// Every connected graph on n vertices has a vertex whose removal leaves it
/// connected, so extending each class on n-1 vertices by a vertex joined to a
/// non-empty subset reaches every class on n vertices.
std::vector<Graph> build_level(std::size_t n, const std::vector<Graph>& previous) {
  const bool exhaustive = n <= 6;
  std::vector<std::uint64_t> codes;
  for (const Graph& base : previous) {
    Rows r = rows_of(base);
    r.n = n;
    const std::size_t fresh = n - 1;
    for (unsigned subset = 1; subset < (1u << fresh); ++subset) {
      Rows ext = r;
      for (std::size_t w = 0; w < fresh; ++w)
        if ((subset >> w) & 1u) ext.link(fresh, w);
      codes.push_back(exhaustive ? canonical_exhaustive(ext) : canonical_refined(ext));
    }
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

  std::vector<std::pair<std::size_t, std::uint64_t>> keyed;
  keyed.reserve(codes.size());
  for (std::uint64_t c : codes) keyed.emplace_back(static_cast<std::size_t>(__builtin_popcountll(c)), c);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> level;
  level.reserve(keyed.size());
  for (const auto& [edges, code] : keyed) level.push_back(graph_of(rows_from_code(n, code)));
  return level;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  const Rows r = rows_of(g);
  std::array<std::size_t, 16> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  return code_of(r, order.data());
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  if (n > kMaxCodeOrder) throw UnsupportedSizeError("adjacency codes support at most 11 vertices");
  return graph_of(rows_from_code(n, code));
}

std::uint64_t canonical_code_exhaustive(const Graph& g) {
  if (g.vertex_count() > kMaxEnumeratedOrder) {
    throw UnsupportedSizeError("exhaustive canonical form supports at most 8 vertices");
  }
  return canonical_exhaustive(rows_of(g));
}

std::uint64_t canonical_code_refined(const Graph& g) { return canonical_refined(rows_of(g)); }

const std::vector<Graph>& enumerate_connected_graphs(std::size_t n) {
  if (n < 1 || n > kMaxEnumeratedOrder) {
    throw UnsupportedSizeError("built-in enumeration covers 1.." + std::to_string(kMaxEnumeratedOrder) +
                               " vertices; supply a graph6 corpus for n=" + std::to_string(n));
  }
  static std::array<std::vector<Graph>, kMaxEnumeratedOrder + 1> levels;
  static std::array<std::once_flag, kMaxEnumeratedOrder + 1> once;
  std::call_once(once[n], [n] {
    levels[n] = n == 1 ? std::vector<Graph>{Graph(1)} : build_level(n, enumerate_connected_graphs(n - 1));
  });
  return levels[n];
}

std::vector<Graph> enumerate_connected_graphs_up_to(std::size_t n_max) {
  std::vector<Graph> all;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& level = enumerate_connected_graphs(n);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

}  // namespace bugscope
