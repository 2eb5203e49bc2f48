#pragma once

// Seeded streams that do not depend on the standard library's distribution
// implementations, so reports are reproducible across toolchains.

#include <cstdint>
#include <random>
#include <string_view>

#include "padicvol/rational.hpp"

namespace padicvol {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent substream for a named consumer of a base seed.
inline Rng substream(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(splitmix64(seed ^ splitmix64(h)));
}

/// Uniform integer in [lo, hi].
template <class G>
long uniform_int(G& g, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(g() % span);
}

/// p/q with |p| <= num_bound and 1 <= q <= den_bound; nonzero when asked.
template <class G>
Rational uniform_rational(G& g, long num_bound, long den_bound, bool nonzero = false) {
  long p = 0;
  do {
    p = uniform_int(g, -num_bound, num_bound);
  } while (nonzero && p == 0);
  Rational r(p, uniform_int(g, 1, den_bound));
  r.canonicalize();
  return r;
}

}  // namespace padicvol
