#pragma once

#include "rainbow/heuristics.hpp"

#include <optional>

namespace rainbow {

// Exhaustive searches refuse n > max_n unless a node or time budget is
// given; running out of budget is an explicit outcome, never a silent
// truncation. parallel splits the top-level branching across threads and
// must produce the single-threaded result (ignored when budgets are set).
struct SearchLimits {
  int max_n = 11;
  std::optional<long long> node_budget;
  std::optional<long long> time_budget_ms;
  bool parallel = false;
};

// Longest k-rainbow path by depth-first backtracking with multiplicity
// pruning and an off-path-count bound. Deterministic: the first optimum in
// expansion order (start ascending, extensions ascending) among paths with
// start <= end. exhaustive is false iff a budget ran out (best found so far
// is returned, guaranteed_bound dropped to 1).
SolveReport max_k_rainbow_path_exact(const ColoredGraph& g, int k,
                                     const SearchLimits& limits = {});

enum class HamOutcome { exists, not_exists, budget_exhausted };
struct HamiltonianRainbowResult {
  HamOutcome outcome;
  std::optional<Path> witness;  // set iff outcome == exists
};
HamiltonianRainbowResult has_hamiltonian_rainbow_path(const ColoredGraph& g,
                                                      const SearchLimits& limits = {});

// Longest rainbow cycle (length = edge count >= 3); requires n >= 3. Every
// proper coloring has a rainbow triangle, so an exhaustive run never comes
// back empty.
struct CycleSearchResult {
  std::vector<int> cycle;  // vertex sequence, closing edge implied
  bool exhaustive = true;
  int length() const { return static_cast<int>(cycle.size()); }
};
CycleSearchResult max_rainbow_cycle_exact(const ColoredGraph& g,
                                          const SearchLimits& limits = {});

}  // namespace rainbow
