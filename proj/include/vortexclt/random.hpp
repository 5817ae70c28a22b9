#pragma once

#include <cstdint>
#include <random>

namespace vortexclt {

using Rng = std::mt19937_64;

/// Independent stream for chain `index` of a run seeded with `master`.
/// The seed sequence is (low32(master), high32(master), index, 0x5eed).
inline Rng stream_for(std::uint64_t master, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master),
                    static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32), 0x5eedu};
  return Rng(seq);
}

inline double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace vortexclt
