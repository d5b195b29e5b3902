#pragma once
// Deterministic randomness helpers.
//
// std::uniform_int_distribution and std::shuffle are implementation-defined,
// so sampling goes through hand-rolled, bit-exact routines: the same seed
// must yield the same bytes on every platform and standard library.

#include <cstdint>
#include <random>
#include <vector>

namespace chainmin {

using Rng = std::mt19937_64;

// Unbiased draw from {0, ..., m-1} by rejection on the top of the 64-bit range.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t m) {
  if (m == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % m;
  }
}

template <typename T>
void fisher_yates(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace chainmin
