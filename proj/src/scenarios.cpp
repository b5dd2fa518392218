#include "schoolmatch/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace schoolmatch {

void Scenario::validate(const Problem& problem) const {
  if (populations.empty())
    throw ValidationError("scenario: needs at least one population");
  double total = 0.0;
  for (const auto& pop : populations) {
    if (!(pop.fraction > 0.0) || pop.fraction > 1.0)
      throw ValidationError("scenario: population fraction outside (0,1]");
    total += pop.fraction;
    if (static_cast<int>(pop.weights.size()) != problem.num_schools)
      throw ValidationError("scenario: weight count does not match schools");
    for (double w : pop.weights)
      if (!(w > 0.0)) throw ValidationError("scenario: weights must be > 0");
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ValidationError("scenario: population fractions must sum to 1");
}

std::vector<double> Scenario::average_weights() const {
  std::vector<double> avg(populations.front().weights.size(), 0.0);
  for (const auto& pop : populations)
    for (size_t j = 0; j < avg.size(); ++j)
      avg[j] += pop.fraction * pop.weights[j];
  return avg;
}

Problem builtin_problem() {
  Problem p;
  p.num_schools = 10;
  p.capacities.assign(10, 100);
  p.num_pupils = 1000;
  return p;
}

Scenario builtin_scenario(std::string_view name) {
  Scenario s;
  if (name == "A") {
    s.populations = {{1.0, std::vector<double>(10, 1.0)}};
  } else if (name == "B") {
    s.populations = {{1.0, {10, 9, 8, 7, 6, 5, 4, 3, 2, 1}}};
  } else if (name == "C") {
    s.populations = {{1.0, {50, 50, 10, 10, 10, 10, 10, 10, 1, 1}}};
  } else if (name == "D") {
    s.populations = {{0.6, {20, 20, 20, 20, 20, 1, 1, 1, 1, 1}},
                     {0.4, {1, 1, 1, 1, 1, 20, 20, 20, 20, 20}}};
  } else {
    throw ValidationError("unknown scenario name: " + std::string(name));
  }
  return s;
}

std::vector<int> population_split(const Scenario& scenario, int num_pupils) {
  std::vector<int> member(num_pupils, 0);
  double cumulative = 0.0;
  int start = 0;
  for (size_t k = 0; k < scenario.populations.size(); ++k) {
    cumulative += scenario.populations[k].fraction;
    const int end = static_cast<int>(std::llround(cumulative * num_pupils));
    for (int i = start; i < std::min(end, num_pupils); ++i)
      member[i] = static_cast<int>(k);
    start = end;
  }
  return member;
}

PreferenceSet generate_dataset(const Problem& problem, const Scenario& scenario,
                               Rng& rng) {
  problem.validate();
  scenario.validate(problem);
  const int m = problem.num_schools;
  const auto member = population_split(scenario, problem.num_pupils);

  PreferenceSet prefs(problem.num_pupils);
  std::vector<int> remaining;
  for (int i = 0; i < problem.num_pupils; ++i) {
    const auto& weights = scenario.populations[member[i]].weights;
    remaining.resize(m);
    std::iota(remaining.begin(), remaining.end(), 0);
    auto& ranking = prefs[i].ranking;
    ranking.clear();
    ranking.reserve(m);
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    while (remaining.size() > 1) {
      const double target = rng.next_unit() * total;
      double cursor = 0.0;
      size_t pick = remaining.size() - 1;  // guards rounding at the far end
      for (size_t k = 0; k < remaining.size(); ++k) {
        cursor += weights[remaining[k]];
        if (target < cursor) {
          pick = k;
          break;
        }
      }
      ranking.push_back(remaining[pick]);
      total -= weights[remaining[pick]];
      remaining.erase(remaining.begin() + static_cast<long>(pick));
    }
    ranking.push_back(remaining.front());
  }
  return prefs;
}

Preference apply_cautious(const Preference& true_pref,
                          const std::vector<double>& popularity) {
  Preference out = true_pref;
  const auto head =
      out.ranking.begin() +
      std::min<std::ptrdiff_t>(3, static_cast<std::ptrdiff_t>(out.ranking.size()));
  std::stable_sort(out.ranking.begin(), head, [&](int lhs, int rhs) {
    return popularity[lhs] < popularity[rhs];
  });
  return out;
}

Preference apply_gambling(const Preference& true_pref,
                          const std::vector<double>& popularity) {
  Preference out = true_pref;
  if (out.ranking.size() < 2) return out;
  std::stable_sort(out.ranking.begin() + 1, out.ranking.end(),
                   [&](int lhs, int rhs) {
                     return popularity[lhs] < popularity[rhs];
                   });
  return out;
}

std::vector<char> strategist_mask(int num_pupils, double fraction, Rng& rng) {
  if (fraction < 0.0 || fraction > 1.0)
    throw ValidationError("strategist fraction outside [0,1]");
  const int count = static_cast<int>(std::llround(fraction * num_pupils));
  const auto order = rng.permutation(num_pupils);
  std::vector<char> mask(num_pupils, 0);
  for (int k = 0; k < count; ++k) mask[order[k]] = 1;
  return mask;
}

PreferenceSet apply_strategy(StrategyKind kind, const PreferenceSet& true_prefs,
                             const std::vector<char>& mask,
                             const std::vector<double>& popularity) {
  if (mask.size() != true_prefs.size())
    throw ValidationError("strategist mask does not match pupil count");
  PreferenceSet out = true_prefs;
  if (kind == StrategyKind::Honest) return out;
  for (size_t i = 0; i < out.size(); ++i) {
    if (!mask[i]) continue;
    out[i] = kind == StrategyKind::Cautious
                 ? apply_cautious(true_prefs[i], popularity)
                 : apply_gambling(true_prefs[i], popularity);
  }
  return out;
}

PreferenceSet complete_preferences(const std::vector<std::vector<int>>& partial,
                                   const Problem& problem) {
  problem.validate();
  const int m = problem.num_schools;
  if (static_cast<int>(partial.size()) != problem.num_pupils)
    throw ValidationError("completion: one list per pupil required");

  std::vector<int> first_choices(m, 0);
  for (const auto& list : partial) {
    std::vector<char> seen(m, 0);
    for (int school : list) {
      if (school < 0 || school >= m)
        throw ValidationError("completion: school id out of range");
      if (seen[school])
        throw ValidationError("completion: duplicate school in a list");
      seen[school] = 1;
    }
    if (!list.empty()) ++first_choices[list.front()];
  }

  // Missing schools are appended least-popular-first: a short list concedes
  // the contested schools, which is the incentive to submit a long one.
  std::vector<int> append_order(m);
  std::iota(append_order.begin(), append_order.end(), 0);
  std::sort(append_order.begin(), append_order.end(), [&](int lhs, int rhs) {
    if (first_choices[lhs] != first_choices[rhs])
      return first_choices[lhs] < first_choices[rhs];
    return lhs < rhs;
  });

  PreferenceSet out(partial.size());
  for (size_t i = 0; i < partial.size(); ++i) {
    auto& ranking = out[i].ranking;
    ranking = partial[i];
    std::vector<char> present(m, 0);
    for (int school : ranking) present[school] = 1;
    for (int school : append_order)
      if (!present[school]) ranking.push_back(school);
  }
  validate_preferences(problem, out);
  return out;
}

std::pair<RankReport, RankReport> true_rank_report(
    const Problem& problem, const PreferenceSet& true_prefs,
    const Solution& sol, const std::vector<char>& mask) {
  problem.validate();
  validate_preferences(problem, true_prefs);
  check_feasible(problem, sol);
  if (mask.size() != true_prefs.size())
    throw ValidationError("strategist mask does not match pupil count");

  const int m = problem.num_schools;
  RankReport groups[2];
  for (auto& report : groups) {
    report.histogram.assign(m, 0);
    report.cumulative.assign(m, 0.0);
  }
  for (size_t i = 0; i < true_prefs.size(); ++i) {
    const int rank = rank_of(true_prefs[i], sol.assignment[i]);
    auto& report = groups[mask[i] ? 0 : 1];
    report.ranks.push_back(rank);
    ++report.histogram[rank - 1];
  }
  for (auto& report : groups) {
    const double n = static_cast<double>(report.ranks.size());
    if (n == 0) continue;
    report.average_rank =
        std::accumulate(report.ranks.begin(), report.ranks.end(), 0.0) / n;
    int seen = 0;
    for (int k = 0; k < m; ++k) {
      seen += report.histogram[k];
      report.cumulative[k] = seen / n;
    }
  }
  return {std::move(groups[0]), std::move(groups[1])};
}

}  // namespace schoolmatch
