#pragma once

// Portable draws on top of mt19937_64. The std::*_distribution adaptors are
// implementation-defined across standard libraries, so everything that feeds
// frozen expectations or published CSVs goes through these instead.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace aqlab::rng {

inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

// Box-Muller, cosine branch only.
inline double gaussian(std::mt19937_64& g) {
  const double u1 = (static_cast<double>(g() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = uniform01(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Named substream: decorrelates independent uses of one base seed.
inline std::uint64_t substream_seed(std::uint64_t base, std::string_view name,
                                    std::uint64_t k = 0) {
  std::uint64_t h = 0xCBF29CE484222325ull;  // FNV-1a over the name
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return splitmix64(splitmix64(base ^ h) + k);
}

}  // namespace aqlab::rng
