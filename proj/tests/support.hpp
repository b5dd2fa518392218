#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "schoolmatch/core.hpp"
#include "schoolmatch/rng.hpp"

namespace test_support {

using schoolmatch::Preference;
using schoolmatch::PreferenceSet;
using schoolmatch::Problem;
using schoolmatch::Rng;
using schoolmatch::TieBreaker;

inline Problem make_problem(std::vector<int> capacities, int pupils) {
  Problem p;
  p.num_schools = static_cast<int>(capacities.size());
  p.capacities = std::move(capacities);
  p.num_pupils = pupils;
  return p;
}

inline PreferenceSet make_prefs(std::vector<std::vector<int>> rankings) {
  PreferenceSet prefs(rankings.size());
  for (std::size_t i = 0; i < rankings.size(); ++i)
    prefs[i].ranking = std::move(rankings[i]);
  return prefs;
}

inline TieBreaker identity_tb(const Problem& p) {
  std::vector<int> order(p.num_pupils);
  for (int i = 0; i < p.num_pupils; ++i) order[i] = i;
  return TieBreaker::single(p.num_schools, std::move(order));
}

struct Instance {
  Problem problem;
  PreferenceSet prefs;
};

// Four pupils, four single-seat schools; the worked example where immediate
// acceptance lands on (1,2,3,4) with average rank 7/4 while the optimum is
// (1,2,4,3) with 6/4 (ids here 0-based).
inline Instance footnote_instance() {
  return {make_problem({1, 1, 1, 1}, 4),
          make_prefs({{0, 2, 1, 3}, {1, 0, 2, 3}, {2, 3, 0, 1}, {1, 2, 0, 3}})};
}

inline Instance random_instance(Rng& rng, int max_schools, int max_pupils,
                                int max_cap) {
  Instance inst;
  const int m = 1 + static_cast<int>(rng.below(max_schools));
  std::vector<int> caps(m);
  int total = 0;
  for (int j = 0; j < m; ++j) {
    caps[j] = 1 + static_cast<int>(rng.below(max_cap));
    total += caps[j];
  }
  const int n = 1 + static_cast<int>(rng.below(std::min(max_pupils, total)));
  inst.problem = make_problem(std::move(caps), n);
  inst.prefs.resize(n);
  for (int i = 0; i < n; ++i) inst.prefs[i].ranking = rng.permutation(m);
  return inst;
}

}  // namespace test_support
