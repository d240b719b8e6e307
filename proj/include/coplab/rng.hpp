#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace coplab {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]. The standard distributions are
// implementation-defined, so reports would differ across libraries.
inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return rng();
  std::uint64_t n = span + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % n;
}

inline std::int64_t uniform_signed(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform(rng, 0, static_cast<std::uint64_t>(hi - lo)));
}

inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

}  // namespace coplab
