#pragma once

#include <cstdint>

#include "holoforms/rational.hpp"

namespace holoforms {

// Deterministic 64-bit generator (splitmix64).  All randomized checks draw
// from this so that seeded runs produce identical output on every platform;
// the standard <random> distributions are implementation-defined and would
// not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.  Modulo bias is irrelevant for property tests.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform integer in [lo, hi], inclusive.
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Small random rational with numerator in [-max_num, max_num] and
// denominator in [1, max_den].
inline Rational random_rational(SplitMix64& rng, int max_num = 9, int max_den = 4) {
  return Rational(BigInt(rng.int_in(-max_num, max_num)), BigInt(rng.int_in(1, max_den)));
}

inline Scalar random_scalar(SplitMix64& rng, int max_num = 9, int max_den = 4) {
  return Scalar(random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den));
}

}  // namespace holoforms
