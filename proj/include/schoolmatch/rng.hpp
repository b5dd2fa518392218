#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace schoolmatch {

// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable seed for (base, experiment, role[, index]). Every consumer of
// randomness owns a distinct role so adding a study never perturbs the
// streams of another.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t experiment,
                                 std::uint64_t role, std::uint64_t index = 0) {
  std::uint64_t h = mix64(base);
  h = mix64(h ^ experiment);
  h = mix64(h ^ role);
  h = mix64(h ^ index);
  return h;
}

// Deterministic random stream. mt19937_64 output is pinned by the standard,
// and all derived draws below avoid std distributions (whose algorithms are
// implementation-defined), so sequences are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n). Unbiased via rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % n) + 1;  // 2^64 mod n, in [1, n]
    if (rem == n) return engine_() % n;       // n divides 2^64
    const std::uint64_t limit = max - rem + 1;  // largest multiple of n
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Fisher-Yates permutation of {0, ..., n-1}.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace schoolmatch
