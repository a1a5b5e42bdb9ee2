#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bugscope/graph.hpp"
#include "bugscope/rational.hpp"

namespace bugscope {

/// (m,t)-uniformity: every vertex is close to m edges and every edge is close
/// to t vertices. For an edgeless graph t is reported as 0.
struct UniformityReport {
  bool is_uniform = false;
  std::size_t m = 0;
  std::size_t t = 0;
  bool is_complete_multipartite = false;
};

UniformityReport uniformity_params(const Graph& h);

/// No induced K_2 + K_1.
bool is_complete_multipartite(const Graph& h);

/// |E| - |V|.
std::int64_t excess(const Graph& h);

/// max_v |close(v)|; 0 for edgeless graphs.
std::size_t closeness(const Graph& h);

/// Necessary conditions on a non-star component of a low-betweenness coBUG
/// whose complement is not a union of equal stars.
enum class Claim {
  degree_1,            // no vertex of degree 1
  triangle_deg2,       // no degree-2 vertex with adjacent neighbours
  c4c5_adjacent_deg2,  // no adjacent degree-2 pair on a 4- or 5-cycle
  path_of_three_deg2,  // no path x-y-z of degree-2 vertices
  close_inclusion,     // no close(x) ⊊ close(y)
  min_close_4,         // every edge close to >= 4 vertices
  min_size_6,          // at least six vertices
  excess_lt_2,         // excess >= 2
  closeness_bound,     // |close(v)| >= 2 deg(v)
};

inline constexpr std::array<Claim, 9> kAllClaims = {
    Claim::degree_1,        Claim::triangle_deg2, Claim::c4c5_adjacent_deg2,
    Claim::path_of_three_deg2, Claim::close_inclusion, Claim::min_close_4,
    Claim::min_size_6,      Claim::excess_lt_2,   Claim::closeness_bound,
};

std::string_view claim_name(Claim c);
std::optional<Claim> claim_from_name(std::string_view name);

struct StructuralVerdict {
  bool passes = true;
  std::vector<Claim> failed_claims;  // in kAllClaims order

  bool failed(Claim c) const;
};

/// Evaluates every claim (no short-circuit). Requires h connected and not a
/// star; throws PreconditionError otherwise.
StructuralVerdict structural_filters(const Graph& h);

/// Consequences of a coBUG holding both K_{1,l} and an (m,t)-uniform
/// non-star component H:
///   1. n = l + 1 + l (l + 1 - t) / (m - l)
///   2. l (l + 1 - t) / (m - l) >= t
///   3. m > l and t < l + 1
///   4. l (l + 1) >= m t
struct StarUniformConstraints {
  std::optional<Rational> n;  // absent when m == l
  bool item2 = false;
  bool item3 = false;
  bool item4 = false;
  bool n_positive_integer = false;
  bool feasible = false;
  std::vector<std::string> reasons;
};

/// Requires m >= 1 and t >= 2.
StarUniformConstraints star_uniform_constraints(std::size_t ell, std::size_t m, std::size_t t);

/// floor((c (l + 1) - 4 l) / (c - l)): the largest host order compatible with
/// a K_{1,l} component next to a non-star component of closeness c.
/// Requires c > l.
std::int64_t closeness_bound(std::size_t ell, std::size_t c);

/// Largest host order allowed by the minimum co-betweenness 6/(n-4) of an
/// exotic coBUG against l/(n-l-1); defined for l <= 5 (none beyond).
std::optional<std::int64_t> min_co_betweenness_bound(std::size_t ell);

}  // namespace bugscope
