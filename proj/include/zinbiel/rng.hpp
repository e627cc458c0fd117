#pragma once

#include <cstdint>

#include "zinbiel/rational.hpp"

namespace zinbiel {

/// Deterministic, platform-independent 64-bit generator (splitmix64).
/// All randomized strategies route through this so that equal seeds give
/// byte-identical results everywhere.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

private:
  std::uint64_t state_;
};

/// Small rational with numerator in [-max_abs, max_abs] and denominator in
/// [1, max_den].
Rational random_rational(SplitMix64& rng, long max_abs = 5, long max_den = 3);

/// Small nonzero rational.
Rational random_nonzero_rational(SplitMix64& rng, long max_abs = 5, long max_den = 3);

}  // namespace zinbiel
