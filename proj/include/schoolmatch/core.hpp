#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "schoolmatch/rng.hpp"

namespace schoolmatch {

// Invalid argument or malformed input.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance or solution breaks a capacity/assignment rule.
struct FeasibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matching instance: schools with capacities and a pupil count.
// School ids and pupil ids are 0-based internally; all file formats and
// printed output use 1-based ids.
struct Problem {
  int num_schools = 0;
  std::vector<int> capacities;  // one entry per school
  int num_pupils = 0;

  int total_capacity() const;
  // Throws ValidationError unless num_schools >= 1, capacities are
  // non-negative and match num_schools, and num_pupils <= total capacity.
  void validate() const;
};

// One pupil's strict ranking of all schools, most preferred first.
struct Preference {
  std::vector<int> ranking;
};

// One Preference per pupil.
using PreferenceSet = std::vector<Preference>;

// Throws ValidationError unless every preference is a permutation of all
// school ids and there is one preference per pupil.
void validate_preferences(const Problem& problem, const PreferenceSet& prefs);

enum class TieBreakMode { Single, Multiple };

// Lottery-derived strict priority of pupils at each school. A priority order
// lists pupils from highest to lowest priority (position = lottery number,
// lower wins). Single mode shares one order across all schools; Multiple
// mode draws one order per school.
class TieBreaker {
 public:
  static TieBreaker single(int num_schools, std::vector<int> order);
  static TieBreaker multiple(std::vector<std::vector<int>> orders);

  TieBreakMode mode() const { return mode_; }
  int num_pupils() const { return static_cast<int>(positions_[0].size()); }
  int num_schools() const { return num_schools_; }

  // Position of pupil in the priority order of school; smaller = higher
  // priority.
  int priority(int school, int pupil) const {
    return positions_[mode_ == TieBreakMode::Single ? 0 : school][pupil];
  }

  const std::vector<int>& order(int school) const {
    return orders_[mode_ == TieBreakMode::Single ? 0 : school];
  }

  // Throws ValidationError if the stored orders do not cover the problem's
  // pupils or the school count does not match.
  void validate(const Problem& problem) const;

 private:
  TieBreaker(TieBreakMode mode, int num_schools,
             std::vector<std::vector<int>> orders);

  TieBreakMode mode_;
  int num_schools_;
  std::vector<std::vector<int>> orders_;     // 1 order (Single) or M orders
  std::vector<std::vector<int>> positions_;  // inverse permutations
};

// Assignment of every pupil to one school.
struct Solution {
  std::vector<int> assignment;  // assignment[i] = school of pupil i
};

// Ranks achieved by a set of pupils under their own preferences.
struct RankReport {
  std::vector<int> ranks;        // 1-based rank per reported pupil
  double average_rank = 0.0;     // Q
  std::vector<int> histogram;    // pupils per rank, bins 1..M
  std::vector<double> cumulative;  // fraction with rank <= k, k = 1..M
};

// 1-based position of school in the preference. Throws ValidationError if
// school is not a valid id for the ranking.
int rank_of(const Preference& pref, int school);

// rank_table(problem, prefs)[i][j] = 1-based rank of school j for pupil i.
std::vector<std::vector<int>> rank_table(const Problem& problem,
                                         const PreferenceSet& prefs);

// Throws FeasibilityError unless sol assigns every pupil exactly one valid
// school without exceeding any capacity.
void check_feasible(const Problem& problem, const Solution& sol);

// Rank report over all pupils. Throws FeasibilityError on infeasible input.
RankReport evaluate(const Problem& problem, const PreferenceSet& prefs,
                    const Solution& sol);

// Draws the lottery: one shared permutation (Single) or one per school
// (Multiple), uniformly at random from the stream.
TieBreaker make_tiebreaker(TieBreakMode mode, const Problem& problem, Rng& rng);

// Number of pupils assigned differently in a and b. Throws ValidationError
// on length mismatch.
int count_differences(const Solution& a, const Solution& b);

}  // namespace schoolmatch
