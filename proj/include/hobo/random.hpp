/// @file random.hpp
/// @brief Deterministic random-number helpers shared by the instance
/// generator and the annealer.
///
/// std::mt19937_64 output is fully specified by the standard, but the
/// standard distributions are not; these helpers replace them so that a
/// given seed produces the same stream on every platform.

#pragma once

#include <cstdint>
#include <random>

namespace hobo::detail {

/// Engine seeded from a 64-bit seed plus a stream id (e.g. a restart index).
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint32_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), stream};
  return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) using the top 53 bits.
inline double next_unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) via multiply-shift; bound must be >= 1.
inline std::uint64_t next_index(std::mt19937_64& eng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(eng()) * bound) >> 64);
}

}  // namespace hobo::detail
