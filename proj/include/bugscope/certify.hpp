#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bugscope/graph.hpp"
#include "bugscope/rational.hpp"
#include "bugscope/structure.hpp"

namespace bugscope {

/// Structural diagnostics for one non-star component of a certified graph.
struct ComponentStructure {
  std::size_t component = 0;  // index into the inventory
  UniformityReport uniformity;
  std::int64_t excess = 0;
  std::size_t closeness = 0;
  StructuralVerdict verdict;
};

enum class CertificationRoute { none, co_betweenness, direct_betweenness };

/// Verdict on hbar as the complement of a BUG.
struct CertificationReport {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  bool is_cobug = false;
  bool complement_is_bug = false;
  std::optional<Rational> betweenness;      // common value of the complement, when a BUG
  std::optional<Rational> co_betweenness;   // common value, co-betweenness route only
  bool exotic = false;
  std::string exotic_reason;
  CertificationRoute route = CertificationRoute::none;
  ComponentInventory inventory;
  std::vector<std::string> violations;
  std::vector<ComponentStructure> structure;
};

struct CertifyOptions {
  /// Largest order for which the direct-betweenness fallback runs Brandes on
  /// the complement when some edge has undefined weight.
  std::size_t fallback_max_order = 2000;
  /// Non-star components up to this order get a "structure" entry.
  std::size_t structure_max_order = 64;
};

/// Certifies hbar as a coBUG. When the complement has diameter at most 2 (no
/// edge of hbar is close to every vertex) the verdict is equality of all
/// co-betweenness values and the betweenness is |E(hbar)|/n; otherwise the
/// complement is checked directly.
CertificationReport is_cobug(const Graph& hbar, const CertifyOptions& options = {});

std::string_view route_name(CertificationRoute route);

}  // namespace bugscope
