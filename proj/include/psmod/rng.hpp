#pragma once

#include <cstdint>
#include <random>

namespace psmod {

// Deterministic random source for generators and property tests.  mt19937_64
// output is fully specified by the standard; derived draws below avoid
// uniform_int_distribution (whose mapping is implementation-defined) so the
// same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform-ish integer in [0, n); modulo bias is irrelevant for test data.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // Integer in [lo, hi] inclusive.
  long range(long lo, long hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Scalar from the fixed generator pool {-2,...,2}.
  long pool_scalar() { return range(-2, 2); }

  bool chance(double p) {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0) < p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace psmod
