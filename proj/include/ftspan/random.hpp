#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ftspan {

using Rng = std::mt19937_64;

// Stream tags keep the draws of unrelated decisions apart, so the sequential
// and the simulated distributed build consume exactly the same numbers.
enum class StreamTag : std::uint32_t {
  kCenters = 1,
  kPathSamples = 2,
  kWarmupCenters = 3,
  kWarmupSamples = 4,
  kGenerator = 5,
  kVerifier = 6,
  kPermutation = 7,
};

std::uint64_t mix64(std::uint64_t x);

/// Independent generator for (seed, vertex, phase, tag).
Rng stream(std::uint64_t seed, std::uint64_t vertex, std::uint64_t phase, StreamTag tag);

/// Uniform permutation of 0..len-1.
std::vector<std::uint32_t> random_permutation(std::size_t len, std::uint64_t seed);

bool coin(Rng& rng, double p);

}  // namespace ftspan
