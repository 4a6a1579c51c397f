#include "cycletrack/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace cycletrack {

uint64_t Rng::next_below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::next_below: n must be > 0");
  // Rejection sampling to stay unbiased.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

int Rng::uniform_int(int a, int b) {
  if (b < a) throw std::invalid_argument("Rng::uniform_int: empty range");
  return a + static_cast<int>(next_below(static_cast<uint64_t>(b - a) + 1));
}

double Rng::normal(double mu, double sigma) {
  if (have_spare_) {
    have_spare_ = false;
    return mu + sigma * spare_;
  }
  // Box-Muller; regenerate until u is nonzero so log() is finite.
  double u, v;
  do {
    u = next_double();
  } while (u <= 0.0);
  v = next_double();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double theta = 2.0 * M_PI * v;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return mu + sigma * r * std::cos(theta);
}

Rng Rng::fork(uint64_t salt) const {
  // Derive a decorrelated stream: hash the current state with the salt.
  uint64_t z = state_ ^ (salt + 0x9e3779b97f4a7c15ull + (state_ << 6) + (state_ >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return Rng(z ^ (z >> 31));
}

}  // namespace cycletrack
