#pragma once

#include <cstdint>
#include <random>

#include "merocert/power_series.hpp"

namespace merocert {

// Determinism contract: draws derive from raw engine bits, not from
// std::uniform_real_distribution, whose output is implementation-defined.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Uniform over the centered square [-1,1] x [-1,1].
inline Complex uniform_square(std::mt19937_64& rng) {
  const double re = uniform(rng, -1.0, 1.0);
  const double im = uniform(rng, -1.0, 1.0);
  return Complex{re, im};
}

// One root seed, per-trial derived streams.
inline std::mt19937_64 trial_rng(std::uint64_t root_seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(root_seed & 0xffffffffu),
                    static_cast<std::uint32_t>(root_seed >> 32),
                    static_cast<std::uint32_t>(trial & 0xffffffffu),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace merocert
