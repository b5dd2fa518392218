#include "schoolmatch/zeeburg.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace schoolmatch {

namespace {

// Per-school queue state. A queue is first-come-first-served: pupils who
// lined up at an earlier queue rank stay ahead of later arrivals, and the
// tie-breaker orders pupils only within the same arrival cohort. queue_rank
// q means every queued pupil ranks the school at some position <= q.
struct SchoolState {
  int vacant = 0;
  int queue_rank = 1;
  std::vector<int> queue;
};

}  // namespace

ZeeburgResult zeeburg(const Problem& problem, const PreferenceSet& prefs,
                      const TieBreaker& tb) {
  problem.validate();
  validate_preferences(problem, prefs);
  tb.validate(problem);
  if (tb.mode() != TieBreakMode::Single)
    throw ValidationError("zeeburg: requires a single tie-breaker");

  const int n = problem.num_pupils;
  const int m = problem.num_schools;
  const auto ranks = rank_table(problem, prefs);

  ZeeburgResult result;
  result.solution.assignment.assign(n, -1);
  auto& assignment = result.solution.assignment;
  std::vector<SchoolState> schools(m);
  // by_priority[k] = pupil with lottery number k.
  const std::vector<int>& by_priority = tb.order(0);

  for (int j = 0; j < m; ++j) schools[j].vacant = problem.capacities[j];
  for (int p : by_priority) schools[prefs[p].ranking[0]].queue.push_back(p);

  int unplaced = n;

  // Finalize the first `count` pupils of school j's queue and drop them from
  // every queue they appear in.
  auto admit_from_queue = [&](int j, int count) {
    auto& st = schools[j];
    assert(count > 0 && count <= static_cast<int>(st.queue.size()) &&
           count <= st.vacant);
    for (int k = 0; k < count; ++k) {
      const int pupil = st.queue[k];
      assert(assignment[pupil] < 0);
      assignment[pupil] = j;
      --unplaced;
    }
    st.vacant -= count;
    st.queue.erase(st.queue.begin(), st.queue.begin() + count);
    for (auto& other : schools) {
      auto& q = other.queue;
      q.erase(std::remove_if(q.begin(), q.end(),
                             [&](int p) { return assignment[p] >= 0; }),
              q.end());
    }
    if (st.vacant == 0) st.queue.clear();  // full schools are out of the game
  };

  // Raise school j's queue rank by one and line up the unplaced pupils that
  // rank it exactly there at the back of the queue, in tie-breaker order.
  // A pupil ranks each school once, so cohorts never overlap.
  auto promote = [&](int j) {
    auto& st = schools[j];
    assert(st.queue_rank < m);
    ++st.queue_rank;
    for (int p : by_priority)
      if (assignment[p] < 0 && ranks[p][j] == st.queue_rank)
        st.queue.push_back(p);
  };

  while (unplaced > 0) {
    // Step 3: admit entire queues while possible. A school qualifies when
    // its whole current queue fits; an empty queue qualifies through rank
    // promotion until the rank hits the list length. Preference: lowest
    // queue rank, then fewest places left after admission, then lowest id.
    int pick = -1;
    for (int j = 0; j < m; ++j) {
      const auto& st = schools[j];
      if (st.vacant == 0) continue;
      const int len = static_cast<int>(st.queue.size());
      if (len > st.vacant) continue;
      if (len == 0 && st.queue_rank >= m) continue;  // dormant
      if (pick >= 0) {
        const auto& best = schools[pick];
        const int after_j = st.vacant - len;
        const int after_best =
            best.vacant - static_cast<int>(best.queue.size());
        if (st.queue_rank > best.queue_rank ||
            (st.queue_rank == best.queue_rank && after_j >= after_best))
          continue;
      }
      pick = j;
    }

    if (pick >= 0) {
      auto& st = schools[pick];
      if (!st.queue.empty())
        admit_from_queue(pick, static_cast<int>(st.queue.size()));
      if (st.vacant > 0 && st.queue_rank < m) promote(pick);
      continue;
    }

    // Step 4: no queue fits entirely; force a decision on the queue with
    // the smallest rank (ties: smallest overflow, then lowest id) by
    // cutting it at the school's remaining capacity.
    for (int j = 0; j < m; ++j) {
      const auto& st = schools[j];
      if (st.vacant == 0 || st.queue.empty()) continue;
      if (pick >= 0) {
        const auto& best = schools[pick];
        const int over_j = static_cast<int>(st.queue.size()) - st.vacant;
        const int over_best =
            static_cast<int>(best.queue.size()) - best.vacant;
        if (st.queue_rank > best.queue_rank ||
            (st.queue_rank == best.queue_rank && over_j >= over_best))
          continue;
      }
      pick = j;
    }
    assert(pick >= 0);
    ++result.tiebreak_uses;
    admit_from_queue(pick, schools[pick].vacant);
  }

  check_feasible(problem, result.solution);
  return result;
}

}  // namespace schoolmatch
