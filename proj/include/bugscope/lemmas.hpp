#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bugscope {

struct LemmaOutcome {
  std::string name;
  std::size_t checked = 0;     // instances where the hypothesis applied
  std::size_t violations = 0;
  std::optional<std::string> counterexample;  // graph6 of the first violation
  std::string detail;

  bool passed() const { return violations == 0; }
  bool vacuous() const { return checked == 0; }
};

struct LemmaReport {
  std::size_t n_max = 0;
  std::size_t ell_max = 0;
  std::vector<LemmaOutcome> lemmas;

  bool all_passed() const;
};

/// Checks every exhaustive invariant on all connected graphs with at most
/// n_max vertices (n_max <= 8), then the star exclusions for l = 0..ell_max
/// with components capped at n_max vertices. Lemma order and content are
/// deterministic.
LemmaReport verify_lemmas(std::size_t n_max, std::size_t ell_max, std::size_t jobs = 1);

}  // namespace bugscope
