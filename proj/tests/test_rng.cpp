#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "schoolmatch/rng.hpp"

using namespace schoolmatch;

TEST_CASE("same seed yields the same stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derived seeds differ per experiment, role and index") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t e = 0; e < 10; ++e)
    for (std::uint64_t role = 1; role <= 5; ++role)
      for (std::uint64_t idx = 0; idx < 3; ++idx)
        seen.insert(derive_seed(7, e, role, idx));
  CHECK(seen.size() == 10 * 5 * 3);
  CHECK(derive_seed(7, 0, 1) != derive_seed(8, 0, 1));
}

TEST_CASE("below stays in range and hits every value") {
  Rng rng(1);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    REQUIRE(v < 7);
    ++counts[static_cast<int>(v)];
  }
  for (int c : counts) CHECK(c > 700);  // crude uniformity, expectation 1000
}

TEST_CASE("next_unit lies in the half-open unit interval") {
  Rng rng(99);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 10000 == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("permutation is a permutation and varies") {
  Rng rng(5);
  bool saw_non_identity = false;
  for (int trial = 0; trial < 50; ++trial) {
    auto p = rng.permutation(12);
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(12);
    std::iota(expect.begin(), expect.end(), 0);
    REQUIRE(sorted == expect);
    if (!std::is_sorted(p.begin(), p.end())) saw_non_identity = true;
  }
  CHECK(saw_non_identity);
}

TEST_CASE("permutation handles the empty and singleton cases") {
  Rng rng(3);
  CHECK(rng.permutation(0).empty());
  CHECK(rng.permutation(1) == std::vector<int>{0});
}
