#pragma once

#include <cstdint>
#include <random>

namespace levyld {

using Rng = std::mt19937_64;

/// Engine for stream `stream` of master seed `seed`. Distinct (seed, stream)
/// pairs give statistically independent streams; identical pairs give
/// bit-identical sequences.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x9e3779b9u};
  return Rng(seq);
}

/// Uniform on (0, 1].
inline double uniform_open_closed(Rng& rng) {
  return 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace levyld
