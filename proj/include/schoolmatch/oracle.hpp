#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "schoolmatch/core.hpp"

namespace schoolmatch {

// Search space exceeds the configured enumeration bound.
struct SearchTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  double q_min = 0.0;
  std::int64_t rank_sum = 0;
  Solution best;  // lexicographically smallest optimal assignment
};

// Exact minimum average rank by exhaustive search over feasible assignments,
// with branch-and-bound pruning. Refuses to start when the upper bound on
// the number of feasible assignments exceeds max_nodes.
OracleResult optimal_q(const Problem& problem, const PreferenceSet& prefs,
                       std::int64_t max_nodes = 10'000'000);

// All pupil pairs that would BOTH get a strictly better rank by swapping
// seats. Empty result = pairwise Pareto efficient.
std::vector<std::pair<int, int>> scan_pareto(const Problem& problem,
                                             const PreferenceSet& prefs,
                                             const Solution& sol);

// All blocking pairs (pupil, school) with respect to tie-breaker priorities:
// the pupil prefers the school to their assignment, and the school either
// has a free seat or holds a pupil with worse priority. Empty = stable.
std::vector<std::pair<int, int>> scan_blocking(const Problem& problem,
                                               const PreferenceSet& prefs,
                                               const TieBreaker& tb,
                                               const Solution& sol);

}  // namespace schoolmatch
