#pragma once

#include "schoolmatch/core.hpp"

namespace schoolmatch {

struct ZeeburgResult {
  Solution solution;
  // Number of forced queue decisions, i.e. admissions that had to consult
  // the tie-breaker because no queue could be admitted entirely.
  int tiebreak_uses = 0;
};

// Queue-promotion matching. Every school keeps a priority-sorted queue and a
// queue rank; whole queues are admitted whenever they are guaranteed to fit,
// promoting the queue rank and letting unplaced pupils join queues further
// down their list. Only when no queue fits entirely is the tie-breaker used
// to cut one queue. Requires a Single tie-breaker; throws ValidationError on
// a Multiple one.
ZeeburgResult zeeburg(const Problem& problem, const PreferenceSet& prefs,
                      const TieBreaker& tb);

}  // namespace schoolmatch
