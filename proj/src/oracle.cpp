#include "schoolmatch/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace schoolmatch {

namespace {

struct Search {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> ranks;
  std::vector<int> cap;
  std::vector<int> a;
  std::vector<int> best_a;
  std::int64_t best_sum = std::numeric_limits<std::int64_t>::max();

  // Assign pupils in index order, branching over schools in ascending id, so
  // leaves are reached in lexicographic order of the assignment vector. The
  // bound keeps paths alive while they can still TIE the best sum, and the
  // best is replaced only on strict improvement; together that makes the
  // surviving witness the lexicographically smallest optimum.
  void dfs(int depth, std::int64_t partial) {
    if (depth == n) {
      if (partial < best_sum) {
        best_sum = partial;
        best_a = a;
      }
      return;
    }
    const std::int64_t tail = n - depth - 1;  // each unassigned pupil adds >= 1
    for (int j = 0; j < m; ++j) {
      if (cap[j] == 0) continue;
      const std::int64_t np = partial + ranks[depth][j];
      if (np + tail > best_sum) continue;
      --cap[j];
      a[depth] = j;
      dfs(depth + 1, np);
      ++cap[j];
    }
  }
};

}  // namespace

OracleResult optimal_q(const Problem& problem, const PreferenceSet& prefs,
                       std::int64_t max_nodes) {
  problem.validate();
  validate_preferences(problem, prefs);

  const int n = problem.num_pupils;
  const int m = problem.num_schools;
  const int seats = problem.total_capacity();

  double bound = 1.0;
  for (int i = 0; i < n; ++i) bound *= std::min(m, seats - i);
  if (bound > static_cast<double>(max_nodes))
    throw SearchTooLarge("optimal_q: about " + std::to_string(bound) +
                         " assignments exceed the bound of " +
                         std::to_string(max_nodes));

  Search search;
  search.n = n;
  search.m = m;
  search.ranks = rank_table(problem, prefs);
  search.cap = problem.capacities;
  search.a.assign(n, -1);
  search.dfs(0, 0);

  OracleResult result;
  result.rank_sum = n == 0 ? 0 : search.best_sum;
  result.q_min = n == 0 ? 0.0 : static_cast<double>(result.rank_sum) / n;
  result.best.assignment = n == 0 ? std::vector<int>{} : search.best_a;
  return result;
}

std::vector<std::pair<int, int>> scan_pareto(const Problem& problem,
                                             const PreferenceSet& prefs,
                                             const Solution& sol) {
  problem.validate();
  validate_preferences(problem, prefs);
  check_feasible(problem, sol);

  const auto ranks = rank_table(problem, prefs);
  const auto& a = sol.assignment;
  std::vector<std::pair<int, int>> pairs;
  const int n = problem.num_pupils;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (ranks[i][a[j]] < ranks[i][a[i]] && ranks[j][a[i]] < ranks[j][a[j]])
        pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::vector<std::pair<int, int>> scan_blocking(const Problem& problem,
                                               const PreferenceSet& prefs,
                                               const TieBreaker& tb,
                                               const Solution& sol) {
  problem.validate();
  validate_preferences(problem, prefs);
  tb.validate(problem);
  check_feasible(problem, sol);

  const int n = problem.num_pupils;
  const int m = problem.num_schools;
  const auto ranks = rank_table(problem, prefs);
  const auto& a = sol.assignment;

  std::vector<int> used(m, 0);
  // worst[j] = priority position of the weakest pupil held by school j
  std::vector<int> worst(m, -1);
  for (int i = 0; i < n; ++i) {
    ++used[a[i]];
    worst[a[i]] = std::max(worst[a[i]], tb.priority(a[i], i));
  }

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (ranks[i][j] >= ranks[i][a[i]]) continue;
      if (used[j] < problem.capacities[j] || tb.priority(j, i) < worst[j])
        pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

}  // namespace schoolmatch
