#pragma once

#include <cstdint>
#include <random>

namespace stingray {

using Rng = std::mt19937_64;

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Uniform integer in [0, n) by rejection; identical across standard libraries,
/// unlike std::uniform_int_distribution.
inline std::uint64_t below(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

/// kDefaultSeed unless STINGRAY_SEED holds an integer (decimal or 0x-hex).
std::uint64_t default_seed();

}  // namespace stingray
