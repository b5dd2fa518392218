#include "schoolmatch/exchange.hpp"

#include <algorithm>
#include <vector>

namespace schoolmatch {

namespace {

// A swap is admissible when it lowers the pair's summed rank, or keeps the
// sum while strictly lowering the pair's best rank (PE) or worst rank (PEM).
bool improves(ExchangeVariant variant, int ri, int rj, int ni, int nj) {
  const int delta = ni + nj - ri - rj;
  if (delta < 0) return true;
  if (delta > 0) return false;
  if (variant == ExchangeVariant::PE)
    return std::min(ni, nj) < std::min(ri, rj);
  return std::max(ni, nj) < std::max(ri, rj);
}

}  // namespace

ExchangeResult pairwise_exchange(const Problem& problem,
                                 const PreferenceSet& prefs,
                                 const Solution& start,
                                 ExchangeVariant variant) {
  problem.validate();
  validate_preferences(problem, prefs);
  check_feasible(problem, start);

  const int n = problem.num_pupils;
  const auto ranks = rank_table(problem, prefs);

  ExchangeResult result;
  result.solution = start;
  auto& a = result.solution.assignment;
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = ranks[i][a[i]];

  // Scan order is frozen at the starting ranks: worst-placed pupils get the
  // first chance to trade up. Later swaps do not reorder the scan.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  const std::vector<int> start_rank = r;
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if (start_rank[lhs] != start_rank[rhs])
      return start_rank[lhs] > start_rank[rhs];
    return lhs < rhs;
  });

  bool swapped_in_pass = true;
  while (swapped_in_pass) {
    swapped_in_pass = false;
    for (const int i : order) {
      int j = 0;
      while (j < n) {
        if (j != i &&
            improves(variant, r[i], r[j], ranks[i][a[j]], ranks[j][a[i]])) {
          std::swap(a[i], a[j]);
          r[i] = ranks[i][a[i]];
          r[j] = ranks[j][a[j]];
          ++result.swaps;
          swapped_in_pass = true;
          j = 0;  // the new seat may unlock trades rejected earlier
          continue;
        }
        ++j;
      }
    }
  }

  return result;
}

bool is_converged(const Problem& problem, const PreferenceSet& prefs,
                  const Solution& solution, ExchangeVariant variant) {
  problem.validate();
  validate_preferences(problem, prefs);
  check_feasible(problem, solution);

  const int n = problem.num_pupils;
  const auto ranks = rank_table(problem, prefs);
  const auto& a = solution.assignment;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (improves(variant, ranks[i][a[i]], ranks[j][a[j]], ranks[i][a[j]],
                   ranks[j][a[i]]))
        return false;
    }
  }
  return true;
}

}  // namespace schoolmatch
