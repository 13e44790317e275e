#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace spellfix {

// Deterministic random stream. Draws are derived from raw engine output so
// that results are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for one unit of work, e.g. (seed, sentence, pass).
  static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = mix(seed ^ 0x5350454c4c464958ULL);
    for (auto k : keys) h = mix(h ^ mix(k + 0x9E3779B97F4A7C15ULL));
    return Rng(h);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); n must be positive.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace spellfix
