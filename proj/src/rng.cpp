#include "zinbiel/rng.hpp"

namespace zinbiel {

Rational random_rational(SplitMix64& rng, long max_abs, long max_den) {
  long num = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(2 * max_abs + 1))) - max_abs;
  long den = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(max_den))) + 1;
  return Rational(num, den);
}

Rational random_nonzero_rational(SplitMix64& rng, long max_abs, long max_den) {
  for (;;) {
    Rational r = random_rational(rng, max_abs, max_den);
    if (!r.is_zero()) return r;
  }
}

}  // namespace zinbiel
