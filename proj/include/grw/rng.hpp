#ifndef GRW_RNG_HPP
#define GRW_RNG_HPP

#include <cstdint>
#include <random>

#include "grw/linalg.hpp"

namespace grw {

/**
 * Deterministic random source for sampling-based checks.  Built on
 * mt19937_64 with hand-rolled draw helpers (no std::uniform_int_distribution,
 * whose output is implementation-defined), so a (seed, draw sequence) pair
 * yields the same values on every platform and run.
 */
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi)
  {
    if (lo > hi)
      throw std::invalid_argument("Rng::int_in: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) // full 64-bit range
      return static_cast<std::int64_t>(eng_());
    const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
    std::uint64_t draw = eng_();
    while (draw >= limit)
      draw = eng_();
    return lo + static_cast<std::int64_t>(draw % span);
  }

  /// Small rational with numerator in [-4, 4] and denominator in {1, 2, 3}.
  Rational rational()
  {
    const std::int64_t p = int_in(-4, 4);
    const std::int64_t q = int_in(1, 3);
    return Rational(p) / Rational(q);
  }

  /// Small nonzero rational.
  Rational nonzero_rational()
  {
    Rational r = rational();
    while (r == 0)
      r = rational();
    return r;
  }

  Vec vector(Index n)
  {
    Vec v(n);
    for (Index i = 0; i < n; ++i)
      v(i) = rational();
    return v;
  }

  Vec nonzero_vector(Index n)
  {
    if (n == 0)
      throw std::invalid_argument("Rng::nonzero_vector: ambient dimension 0");
    while (true) {
      Vec v = vector(n);
      for (Index i = 0; i < n; ++i)
        if (v(i) != 0)
          return v;
    }
  }

private:
  std::mt19937_64 eng_;
};

} // namespace grw

#endif
