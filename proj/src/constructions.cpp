#include "bugscope/constructions.hpp"

#include <charconv>
#include <numeric>
#include <string>

#include "bugscope/errors.hpp"

namespace bugscope {

namespace {

constexpr std::int64_t kInflation = 27;
constexpr std::int64_t kInflatedCycleOrder = 721;
constexpr std::int64_t kInflatedStars = 81;
constexpr std::int64_t kInflatedStarLeaves = 3924;
// Keeps the above-one family within a few million vertices.
constexpr std::int64_t kAboveOneMaxT = 30;

Graph repeat(const Graph& g, std::size_t copies) {
  const std::vector<Graph> parts(copies, g);
  return disjoint_union(parts);
}

Graph cycle_union(std::span<const std::int64_t> lengths) {
  std::vector<Graph> cycles;
  cycles.reserve(lengths.size());
  for (std::int64_t len : lengths) cycles.push_back(cycle_graph(static_cast<std::size_t>(len)));
  return disjoint_union(cycles);
}

void require_cycle_lengths(std::span<const std::int64_t> lengths) {
  for (std::int64_t len : lengths) {
    if (len < 4) throw PreconditionError("cycle length " + std::to_string(len) + " is below 4");
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::stars: return "stars";
    case Family::cycles: return "cycles";
    case Family::multipartite_plus_stars: return "multipartite-plus-stars";
    case Family::above_one: return "above-one";
    case Family::inflated_cycles: return "inflated-cycles";
  }
  return "unknown";
}

Construction stars_cobug(std::int64_t k, std::int64_t ell) {
  if (k < 2) throw PreconditionError("stars family needs k >= 2 copies");
  if (ell < 0) throw PreconditionError("star size must be non-negative");
  Construction c{repeat(star_graph(static_cast<std::size_t>(ell)), static_cast<std::size_t>(k)),
                 {Family::stars, {k, ell}, Rational::fraction(ell, ell + 1)}};
  return c;
}

Construction cycles_cobug(std::span<const std::int64_t> lengths) {
  if (lengths.size() < 2) throw PreconditionError("cycles family needs at least two cycles");
  require_cycle_lengths(lengths);
  return {cycle_union(lengths), {Family::cycles, {lengths.begin(), lengths.end()}, Rational(1)}};
}

Construction multipartite_plus_stars(std::span<const std::int64_t> part_sizes) {
  if (part_sizes.empty()) throw PreconditionError("multipartite family needs at least one part");
  std::vector<std::size_t> parts;
  for (std::int64_t p : part_sizes) {
    if (p < 1) throw PreconditionError("part sizes must be positive");
    parts.push_back(static_cast<std::size_t>(p));
  }
  const Graph h = complete_multipartite(parts);
  const auto m = static_cast<std::int64_t>(h.edge_count());
  const auto t = static_cast<std::int64_t>(h.vertex_count());
  if (m <= t) {
    throw PreconditionError("multipartite family needs m > t, got m = " + std::to_string(m) +
                            ", t = " + std::to_string(t));
  }
  const Graph stars = repeat(star_graph(static_cast<std::size_t>(m - 1)), static_cast<std::size_t>(m - t));
  return {disjoint_union(h, stars),
          {Family::multipartite_plus_stars, {part_sizes.begin(), part_sizes.end()}, Rational(1)}};
}

Construction family_above_one(std::int64_t t) {
  if (t < 2) throw PreconditionError("above-one family needs t >= 2");
  if (t > kAboveOneMaxT) {
    throw UnsupportedSizeError("above-one family is limited to t <= " + std::to_string(kAboveOneMaxT));
  }
  const std::int64_t k = 4 * t * t - 4 * t - 1;
  const std::int64_t ell = 4 * t * t - 1;
  const std::int64_t b = t + 1;
  const std::int64_t c = 2 * t;
  const std::vector<std::size_t> sides{static_cast<std::size_t>(c), static_cast<std::size_t>(c)};
  const Graph stars = repeat(star_graph(static_cast<std::size_t>(ell)), static_cast<std::size_t>(k));
  const Graph bicliques = repeat(complete_multipartite(sides), static_cast<std::size_t>(b));
  return {disjoint_union(stars, bicliques),
          {Family::above_one, {t}, Rational::fraction(4 * t + 1, 4 * t)}};
}

Construction inflated_cycles_cobug(std::span<const std::int64_t> cycle_lengths) {
  if (cycle_lengths.empty()) throw PreconditionError("inflated family needs at least one cycle");
  require_cycle_lengths(cycle_lengths);
  const std::int64_t total = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), std::int64_t{0});
  if (total != kInflatedCycleOrder) {
    throw PreconditionError("inflated family needs cycle lengths summing to " +
                            std::to_string(kInflatedCycleOrder) + ", got " + std::to_string(total));
  }
  const Graph inflated = inflate(cycle_union(cycle_lengths), kInflation);
  const Graph stars = repeat(star_graph(kInflatedStarLeaves), kInflatedStars);
  return {disjoint_union(inflated, stars),
          {Family::inflated_cycles, {cycle_lengths.begin(), cycle_lengths.end()}, Rational::fraction(13, 4)}};
}

Construction construct_from_text(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  const auto is_sep = [](char ch) { return ch == ' ' || ch == '\t' || ch == ',' || ch == '\n' || ch == '\r'; };
  std::vector<std::size_t> columns;
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (i > start) {
      tokens.push_back(text.substr(start, i - start));
      columns.push_back(start + 1);
    }
  }
  if (tokens.empty()) throw ParseError(1, 0, "empty construction");

  std::vector<std::int64_t> params;
  for (std::size_t j = 1; j < tokens.size(); ++j) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tokens[j].data(), tokens[j].data() + tokens[j].size(), value);
    if (ec != std::errc() || ptr != tokens[j].data() + tokens[j].size()) {
      throw ParseError(1, columns[j], "expected an integer, got '" + std::string(tokens[j]) + "'");
    }
    params.push_back(value);
  }

  const std::string_view family = tokens.front();
  const auto arity = [&](std::size_t want) {
    if (params.size() != want) {
      throw ParseError(1, 0, std::string(family) + " takes " + std::to_string(want) + " parameter(s)");
    }
  };
  if (family == "stars") {
    arity(2);
    return stars_cobug(params[0], params[1]);
  }
  if (family == "cycles") return cycles_cobug(params);
  if (family == "multipartite" || family == "multipartite-plus-stars") return multipartite_plus_stars(params);
  if (family == "above-one") {
    arity(1);
    return family_above_one(params[0]);
  }
  if (family == "inflated" || family == "inflated-cycles") return inflated_cycles_cobug(params);
  throw ParseError(1, 1, "unknown family '" + std::string(family) + "'");
}

}  // namespace bugscope
