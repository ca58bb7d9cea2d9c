#pragma once

#include <cstdint>
#include <random>

namespace mcg {

// Deterministic sampler: mt19937_64 has a fully specified output sequence,
// and the rejection loop below avoids std::uniform_int_distribution, whose
// mapping is implementation-defined.  Same seed, same draws, everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (-n) % n;
    for (;;) {
      std::uint64_t x = rng_();
      if (x >= threshold) return x % n;
    }
  }

  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mcg
