#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dtcrank {

// Deterministic RNG helper. All sampling goes through hand-rolled reductions
// so a fixed seed yields the same streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(mix(seed)) {}

  // Independent stream per (seed, trial) pair.
  static Rng for_trial(uint64_t seed, uint64_t trial) {
    return Rng(seed + 0x9e3779b97f4a7c15ULL * (trial + 1));
  }

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, bound), bound > 0. Rejection keeps it unbiased.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = gen_();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1), 53 bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int k = 0; k < n; ++k) p[k] = k;
    shuffle(p);
    return p;
  }

 private:
  static uint64_t mix(uint64_t x) {  // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 gen_;
};

}  // namespace dtcrank
