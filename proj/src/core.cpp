#include "schoolmatch/core.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace schoolmatch {

int Problem::total_capacity() const {
  return std::accumulate(capacities.begin(), capacities.end(), 0);
}

void Problem::validate() const {
  if (num_schools < 1) throw ValidationError("problem: need at least one school");
  if (static_cast<int>(capacities.size()) != num_schools)
    throw ValidationError("problem: capacity list does not match school count");
  for (int c : capacities)
    if (c < 0) throw ValidationError("problem: negative capacity");
  if (num_pupils < 0) throw ValidationError("problem: negative pupil count");
  if (num_pupils > total_capacity())
    throw ValidationError("problem: more pupils than places");
}

void validate_preferences(const Problem& problem, const PreferenceSet& prefs) {
  if (static_cast<int>(prefs.size()) != problem.num_pupils)
    throw ValidationError("preference set: one ranking per pupil required");
  const int m = problem.num_schools;
  std::vector<char> seen(m);
  for (const Preference& p : prefs) {
    if (static_cast<int>(p.ranking.size()) != m)
      throw ValidationError("preference: ranking must list every school");
    std::fill(seen.begin(), seen.end(), 0);
    for (int s : p.ranking) {
      if (s < 0 || s >= m) throw ValidationError("preference: school id out of range");
      if (seen[s]) throw ValidationError("preference: school listed twice");
      seen[s] = 1;
    }
  }
}

TieBreaker::TieBreaker(TieBreakMode mode, int num_schools,
                       std::vector<std::vector<int>> orders)
    : mode_(mode), num_schools_(num_schools), orders_(std::move(orders)) {
  positions_.reserve(orders_.size());
  for (const auto& order : orders_) {
    std::vector<int> pos(order.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    positions_.push_back(std::move(pos));
  }
}

TieBreaker TieBreaker::single(int num_schools, std::vector<int> order) {
  std::vector<std::vector<int>> orders;
  orders.push_back(std::move(order));
  return TieBreaker(TieBreakMode::Single, num_schools, std::move(orders));
}

TieBreaker TieBreaker::multiple(std::vector<std::vector<int>> orders) {
  const int m = static_cast<int>(orders.size());
  return TieBreaker(TieBreakMode::Multiple, m, std::move(orders));
}

void TieBreaker::validate(const Problem& problem) const {
  if (num_schools_ != problem.num_schools)
    throw ValidationError("tie-breaker: school count mismatch");
  std::vector<char> seen(problem.num_pupils);
  for (const auto& order : orders_) {
    if (static_cast<int>(order.size()) != problem.num_pupils)
      throw ValidationError("tie-breaker: order does not cover all pupils");
    std::fill(seen.begin(), seen.end(), 0);
    for (int p : order) {
      if (p < 0 || p >= problem.num_pupils || seen[p])
        throw ValidationError("tie-breaker: order is not a pupil permutation");
      seen[p] = 1;
    }
  }
}

int rank_of(const Preference& pref, int school) {
  const int m = static_cast<int>(pref.ranking.size());
  if (school < 0 || school >= m)
    throw ValidationError("rank_of: school id out of range");
  for (int k = 0; k < m; ++k)
    if (pref.ranking[k] == school) return k + 1;
  throw ValidationError("rank_of: school missing from ranking");
}

std::vector<std::vector<int>> rank_table(const Problem& problem,
                                         const PreferenceSet& prefs) {
  std::vector<std::vector<int>> table(prefs.size(),
                                      std::vector<int>(problem.num_schools, 0));
  for (std::size_t i = 0; i < prefs.size(); ++i)
    for (int k = 0; k < problem.num_schools; ++k)
      table[i][prefs[i].ranking[k]] = k + 1;
  return table;
}

void check_feasible(const Problem& problem, const Solution& sol) {
  if (static_cast<int>(sol.assignment.size()) != problem.num_pupils)
    throw FeasibilityError("solution: pupil count mismatch");
  std::vector<int> occupancy(problem.num_schools, 0);
  for (int a : sol.assignment) {
    if (a < 0 || a >= problem.num_schools)
      throw FeasibilityError("solution: pupil assigned to unknown school");
    ++occupancy[a];
  }
  for (int j = 0; j < problem.num_schools; ++j)
    if (occupancy[j] > problem.capacities[j])
      throw FeasibilityError("solution: capacity exceeded at school " +
                             std::to_string(j + 1));
}

RankReport evaluate(const Problem& problem, const PreferenceSet& prefs,
                    const Solution& sol) {
  check_feasible(problem, sol);
  const int n = problem.num_pupils;
  const int m = problem.num_schools;
  RankReport report;
  report.ranks.resize(n);
  report.histogram.assign(m, 0);
  report.cumulative.assign(m, 0.0);
  long long sum = 0;
  for (int i = 0; i < n; ++i) {
    const int r = rank_of(prefs[i], sol.assignment[i]);
    report.ranks[i] = r;
    ++report.histogram[r - 1];
    sum += r;
  }
  report.average_rank = n > 0 ? static_cast<double>(sum) / n : 0.0;
  int running = 0;
  for (int k = 0; k < m; ++k) {
    running += report.histogram[k];
    report.cumulative[k] = n > 0 ? static_cast<double>(running) / n : 0.0;
  }
  return report;
}

TieBreaker make_tiebreaker(TieBreakMode mode, const Problem& problem, Rng& rng) {
  if (mode == TieBreakMode::Single)
    return TieBreaker::single(problem.num_schools,
                              rng.permutation(problem.num_pupils));
  std::vector<std::vector<int>> orders;
  orders.reserve(problem.num_schools);
  for (int j = 0; j < problem.num_schools; ++j)
    orders.push_back(rng.permutation(problem.num_pupils));
  return TieBreaker::multiple(std::move(orders));
}

int count_differences(const Solution& a, const Solution& b) {
  if (a.assignment.size() != b.assignment.size())
    throw ValidationError("count_differences: solutions differ in length");
  int count = 0;
  for (std::size_t i = 0; i < a.assignment.size(); ++i)
    if (a.assignment[i] != b.assignment[i]) ++count;
  return count;
}

}  // namespace schoolmatch
