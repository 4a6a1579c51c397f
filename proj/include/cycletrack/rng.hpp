#pragma once

#include <cstdint>

namespace cycletrack {

// Deterministic 64-bit generator (splitmix64 core). Sampling helpers are
// written out explicitly because the <random> distributions are
// implementation-defined and would break run-to-run reproducibility across
// toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n). n must be > 0.
  uint64_t next_below(uint64_t n);

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * next_double(); }

  // Inclusive on both ends.
  int uniform_int(int a, int b);

  double normal(double mu, double sigma);

  // Independent substream, e.g. one per (step, sample).
  Rng fork(uint64_t salt) const;

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cycletrack
