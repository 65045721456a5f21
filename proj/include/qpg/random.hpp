#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace qpg {

// Deterministic RNG. Bounded draws avoid std::uniform_int_distribution so a
// (seed, draw sequence) pair produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n). n must be > 0.
  uint64_t below(uint64_t n) {
    // Rejection sampling on the top bits; bias-free.
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
      const uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool chance(double p) { return uniform01() < p; }

  bool coin() { return (engine_() & 1) != 0; }

  template <typename Container>
  const typename Container::value_type &pick(const Container &c) {
    return c[below(c.size())];
  }

  // Child stream with a decorrelated seed; used for per-worker streams.
  Rng fork(uint64_t salt) {
    uint64_t x = engine_() ^ (salt * 0x9e3779b97f4a7c15ull);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    return Rng(x);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qpg
