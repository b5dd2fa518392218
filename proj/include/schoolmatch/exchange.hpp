#pragma once

#include "schoolmatch/core.hpp"

namespace schoolmatch {

// Post-optimization by pairwise seat swaps. PE prefers the swap that helps
// the worse-off pupil more when the total rank change ties; PEM prefers the
// swap that hurts the better-off pupil less.
enum class ExchangeVariant { PE, PEM };

struct ExchangeResult {
  Solution solution;
  int swaps = 0;
};

// Repeatedly swaps seat pairs that lower the summed preference rank of the
// two pupils involved (or keep it equal while improving the variant's
// tie-break objective) until no such pair remains. The scan order is fixed:
// pupils sorted once by their starting rank, worst first (ties by ascending
// pupil id), each scanned against all pupils in ascending id order, with the
// inner scan restarting after every swap.
ExchangeResult pairwise_exchange(const Problem& problem,
                                 const PreferenceSet& prefs,
                                 const Solution& start, ExchangeVariant variant);

// True when no admissible swap exists for the given assignment, i.e. the
// assignment is a fixed point of pairwise_exchange.
bool is_converged(const Problem& problem, const PreferenceSet& prefs,
                  const Solution& solution, ExchangeVariant variant);

}  // namespace schoolmatch
