#pragma once

#include "schoolmatch/core.hpp"

namespace schoolmatch {

// Immediate acceptance. Round k: every unassigned pupil applies to the k-th
// school on their list; each school admits current-round applicants in
// tie-breaker priority order up to its remaining capacity. Admissions are
// final. Rounds are batched, so the outcome does not depend on pupil
// iteration order.
Solution boston(const Problem& problem, const PreferenceSet& prefs,
                const TieBreaker& tb);

// Student-proposing deferred acceptance. Each round every unheld pupil
// proposes to the best school that has not rejected them; schools keep the
// top proposers-plus-held by tie-breaker priority up to capacity and reject
// the rest. Stable w.r.t. the strict priorities induced by the tie-breaker.
Solution deferred_acceptance(const Problem& problem, const PreferenceSet& prefs,
                             const TieBreaker& tb);

}  // namespace schoolmatch
