#include "schoolmatch/mechanisms.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace schoolmatch {

namespace {

void validate_inputs(const Problem& problem, const PreferenceSet& prefs,
                     const TieBreaker& tb) {
  problem.validate();
  validate_preferences(problem, prefs);
  tb.validate(problem);
}

}  // namespace

Solution boston(const Problem& problem, const PreferenceSet& prefs,
                const TieBreaker& tb) {
  validate_inputs(problem, prefs, tb);
  const int n = problem.num_pupils;
  const int m = problem.num_schools;

  Solution sol;
  sol.assignment.assign(n, -1);
  std::vector<int> remaining = problem.capacities;
  std::vector<std::vector<int>> applicants(m);
  int unassigned = n;

  for (int round = 0; round < m && unassigned > 0; ++round) {
    for (auto& a : applicants) a.clear();
    for (int i = 0; i < n; ++i)
      if (sol.assignment[i] < 0) applicants[prefs[i].ranking[round]].push_back(i);
    for (int j = 0; j < m; ++j) {
      if (remaining[j] == 0 || applicants[j].empty()) continue;
      auto& group = applicants[j];
      std::sort(group.begin(), group.end(), [&](int a, int b) {
        return tb.priority(j, a) < tb.priority(j, b);
      });
      const int admit = std::min<int>(remaining[j], static_cast<int>(group.size()));
      for (int k = 0; k < admit; ++k) {
        sol.assignment[group[k]] = j;
        --unassigned;
      }
      remaining[j] -= admit;
    }
  }
  assert(unassigned == 0);
  return sol;
}

Solution deferred_acceptance(const Problem& problem, const PreferenceSet& prefs,
                             const TieBreaker& tb) {
  validate_inputs(problem, prefs, tb);
  const int n = problem.num_pupils;
  const int m = problem.num_schools;

  std::vector<int> held_at(n, -1);  // school tentatively holding pupil i
  std::vector<int> cursor(n, 0);    // next list position to propose to
  std::vector<std::vector<int>> held(m);
  std::vector<std::vector<int>> proposers(m);

  bool proposed = true;
  while (proposed) {
    proposed = false;
    for (auto& p : proposers) p.clear();
    for (int i = 0; i < n; ++i) {
      if (held_at[i] >= 0) continue;
      assert(cursor[i] < m);
      const int j = prefs[i].ranking[cursor[i]++];
      proposers[j].push_back(i);
      proposed = true;
    }
    if (!proposed) break;
    for (int j = 0; j < m; ++j) {
      if (proposers[j].empty()) continue;
      auto& pool = held[j];
      pool.insert(pool.end(), proposers[j].begin(), proposers[j].end());
      std::sort(pool.begin(), pool.end(), [&](int a, int b) {
        return tb.priority(j, a) < tb.priority(j, b);
      });
      const int keep = std::min<int>(problem.capacities[j],
                                     static_cast<int>(pool.size()));
      for (int k = keep; k < static_cast<int>(pool.size()); ++k)
        held_at[pool[k]] = -1;
      pool.resize(keep);
      for (int p : pool) held_at[p] = j;
    }
  }

  Solution sol;
  sol.assignment.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    assert(held_at[i] >= 0);
    sol.assignment[i] = held_at[i];
  }
  return sol;
}

}  // namespace schoolmatch
