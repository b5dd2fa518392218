#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "schoolmatch/core.hpp"
#include "schoolmatch/rng.hpp"

namespace schoolmatch {

// One pupil population with its school popularity weights. A pupil from this
// population builds their ranking by repeatedly sampling the next school with
// probability proportional to its weight among the schools not yet ranked.
struct Population {
  double fraction = 1.0;
  std::vector<double> weights;
};

struct Scenario {
  std::vector<Population> populations;

  // Throws ValidationError unless fractions are in (0,1] and sum to 1,
  // every weight is positive, and weight vectors match the school count.
  void validate(const Problem& problem) const;
  // Population-fraction weighted mean weight per school; what an outsider
  // (or a strategist) knows about average school popularity.
  std::vector<double> average_weights() const;
};

// The benchmark instance: 10 schools with 100 places each, 1000 pupils.
Problem builtin_problem();

// Named demand patterns, each over the builtin problem:
//   A: all schools equally popular.
//   B: linear decay 10..1.
//   C: two hyped schools (50), six mid (10), two shunned (1).
//   D: two populations of 60% / 40% with mirrored block weights.
Scenario builtin_scenario(std::string_view name);

// Population index per pupil. Multi-population scenarios split pupils
// deterministically by cumulative-rounded counts: the first round(f1*N)
// pupils belong to population 1, and so on.
std::vector<int> population_split(const Scenario& scenario, int num_pupils);

// Draws a full preference permutation per pupil by sequential proportional
// sampling (one uniform draw per chosen school while more than one school
// remains).
PreferenceSet generate_dataset(const Problem& problem, const Scenario& scenario,
                               Rng& rng);

// Misreport transforms. `popularity` holds one weight per school as known to
// the strategist (normally Scenario::average_weights()).
//
// Cautious: re-order the true top three least-popular-first, securing the
// least contested of the pupil's three favourites instead of gambling the
// decisive early rounds on crowded schools. Popularity ties keep the true
// order.
Preference apply_cautious(const Preference& true_pref,
                          const std::vector<double>& popularity);
// Gambling: keep the true first choice and concede everything else: the tail
// ranks the remaining schools least-popular-first, the order the completion
// rule appends to a single-school list. Popularity ties keep the true order.
Preference apply_gambling(const Preference& true_pref,
                          const std::vector<double>& popularity);

enum class StrategyKind { Honest, Cautious, Gambling };

// Marks round(fraction * n) pupils, drawn uniformly, as strategists.
std::vector<char> strategist_mask(int num_pupils, double fraction, Rng& rng);

// Applies the strategy's transform to every masked pupil's preference.
PreferenceSet apply_strategy(StrategyKind kind, const PreferenceSet& true_prefs,
                             const std::vector<char>& mask,
                             const std::vector<double>& popularity);

// Extends partial rankings to full permutations. School popularity is
// measured as the number of first-choice appearances in the submitted lists;
// each pupil's missing schools are appended least-popular-first (ties by
// ascending school id). Throws ValidationError on duplicate or invalid ids.
PreferenceSet complete_preferences(const std::vector<std::vector<int>>& partial,
                                   const Problem& problem);

// Rank reports for strategists and honest pupils, both measured against the
// TRUE preferences. first = strategists, second = honest.
std::pair<RankReport, RankReport> true_rank_report(
    const Problem& problem, const PreferenceSet& true_prefs,
    const Solution& sol, const std::vector<char>& mask);

}  // namespace schoolmatch
