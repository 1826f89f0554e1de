#ifndef EXPRESSO_RNG_HPP
#define EXPRESSO_RNG_HPP

#include <cstdint>
#include <random>

namespace expresso {

// Deterministic random source. Doubles are derived from raw engine output
// instead of std::uniform_real_distribution so that generated corpora are
// byte-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // uniform integer in [lo, hi] inclusive
  int uniform_int(int lo, int hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool chance(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace expresso

#endif
