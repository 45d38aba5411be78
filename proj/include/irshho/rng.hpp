#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace irshho {

// SplitMix64 finalizer, used to derive substream seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream-splitting rule: the generator for (stream, member) under a master
// seed is an mt19937_64 seeded with a splitmix64 chain over the three values.
// The optimizer uses stream 0 for population initialization and stream t+1
// for iteration t, with one member per agent, so agents can be processed in
// any order (or concurrently) without changing the draws any of them sees.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t member) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ splitmix64(stream));
  s = splitmix64(s ^ splitmix64(member));
  return std::mt19937_64(s);
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

// Index draw in [0, n) via the 128-bit multiply trick; n must be > 0.
inline std::size_t uniform_index(std::mt19937_64& g, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(g()) * static_cast<unsigned __int128>(n)) >> 64);
}

// One standard normal per call (Box-Muller, cosine half). Consumes exactly
// two engine draws, which keeps substream consumption easy to reason about.
inline double normal01(std::mt19937_64& g) {
  const double u1 = 1.0 - uniform01(g);  // (0, 1], keeps the log finite
  const double u2 = uniform01(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace irshho
