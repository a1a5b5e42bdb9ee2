#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bugscope/certify.hpp"
#include "bugscope/graph.hpp"
#include "bugscope/rational.hpp"
#include "bugscope/structure.hpp"

namespace bugscope {

struct SearchConfig {
  std::size_t ell_min = 0;
  std::size_t ell_max = 8;
  /// Largest non-star component considered. Above the built-in enumerator
  /// limit a corpus is required; below 6 the strict search is vacuous.
  std::size_t component_vertex_cap = 8;
  /// Largest host order tried when no proven bound is tighter.
  std::size_t n_cap = 256;
  /// 1 or 2.
  std::size_t max_nonstar_components = 1;
  /// graph6 file replacing the built-in enumerator as the candidate source.
  std::optional<std::filesystem::path> corpus;
  /// Drops the structural and uniformity filters, the three-star lower bound
  /// and the |E| < n requirement, so coBUGs of betweenness >= 1 are reported
  /// in SearchResult::non_exotic.
  bool allow_betweenness_one = false;
  /// Keep a per-candidate elimination log in SearchResult::eliminations.
  bool record_eliminations = false;
  std::size_t jobs = 1;
};

struct CandidateElimination {
  std::string graph6;
  std::string reason;
};

/// Names used in SearchResult::pruned_counts besides the claim names.
inline constexpr const char* kPrunedOverCap = "over-cap";
inline constexpr const char* kPrunedDisconnected = "disconnected";
inline constexpr const char* kPrunedStar = "star";
inline constexpr const char* kPrunedUniform = "uniform";
inline constexpr const char* kPrunedNoHost = "no-balanced-host";

/// One enumerated candidate and the first filter that removed it, if any.
struct CandidateOutcome {
  Graph graph;
  std::optional<std::string> pruned_by;
  std::vector<Claim> failed_claims;  // every failed claim, for tallies
};

/// Every candidate of the configured source, in source order, with its
/// pruning verdict. Filter order: over-cap, disconnected, star, uniform, then
/// the structural claims. Throws UnsupportedSizeError for a cap above the
/// enumerator limit without a corpus, ParseError for a bad corpus line.
std::vector<CandidateOutcome> classify_candidates(const SearchConfig& cfg);

/// The candidates that survive every filter.
std::vector<Graph> candidate_components(const SearchConfig& cfg);

/// A balanced configuration: non-star components next to star_copies copies
/// of K_{1,ell}, with every vertex at co-betweenness ell/(n-ell-1).
struct SearchHit {
  std::size_t ell = 0;
  std::size_t n = 0;
  std::size_t star_copies = 0;
  std::vector<Graph> components;
  Graph graph;
  CertificationReport report;
};

struct EllStats {
  std::size_t ell = 0;
  std::size_t evaluated = 0;      // (candidate or pair) configurations
  std::size_t window_empty = 0;
  std::size_t n_cap_limited = 0;  // windows cut by n_cap rather than a proven bound
  std::size_t hosts_tested = 0;
  std::size_t mismatches = 0;
  std::size_t accepted = 0;
};

struct SearchResult {
  SearchConfig config;
  std::size_t enumerated = 0;
  /// Candidates removed per filter (first failure), in filter order. Together
  /// with accepted_candidates this accounts for every enumerated candidate.
  std::vector<std::pair<std::string, std::size_t>> pruned_counts;
  /// Every failed structural claim, not only the first.
  std::vector<std::pair<std::string, std::size_t>> claim_tallies;
  std::size_t survivors = 0;
  std::size_t accepted_candidates = 0;
  std::vector<EllStats> per_ell;
  std::vector<SearchHit> found;       // exotic coBUGs
  std::vector<SearchHit> non_exotic;  // balanced but not exotic
  /// Filled when config.record_eliminations is set, in candidate order.
  std::vector<CandidateElimination> eliminations;
  bool exhausted = false;
  double wall_clock_seconds = 0;
};

/// Searches for exotic coBUGs made of surviving candidates plus copies of
/// K_{1,l}. Host orders run over n ≡ t (mod l+1) between
/// max(t+l+1, 3(l+1)+t) and min(n_cap, closeness_bound(l, c)) (n_cap alone
/// when c <= l). Every acceptance is re-certified with is_cobug.
SearchResult exotic_search(const SearchConfig& cfg);

struct StarExclusionReport {
  std::size_t ell = 0;
  std::int64_t n_lower = 0;  // 3l + 9
  /// closeness_bound(l, l+1), tightened by the minimum co-betweenness bound
  /// for l <= 5.
  std::int64_t n_upper = 0;
  bool window_empty = false;
  /// Closeness values c > l whose bound still reaches n_lower.
  std::vector<std::size_t> forced_closeness;
  /// floor((n_upper - 6) / (l + 1)) - 1 when the window is non-empty.
  std::optional<std::int64_t> max_excess;
  SearchResult search;  // eliminations recorded
  bool excluded = false;  // found is empty
};

/// Pins the search to one star size and records the numeric bounds and the
/// reason each candidate was eliminated.
StarExclusionReport verify_star_exclusion(std::size_t ell, std::size_t cap, const SearchConfig& base = {});

struct BugEntry {
  Graph graph;
  Rational value;
};

/// Every connected BUG on at most n_max vertices (n_max <= 8), smallest
/// order first, enumeration order within an order.
std::vector<BugEntry> exhaustive_bug_scan(std::size_t n_max, std::size_t jobs = 1);

}  // namespace bugscope
