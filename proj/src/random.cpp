#include "ftspan/random.hpp"

#include <algorithm>
#include <numeric>

namespace ftspan {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng stream(std::uint64_t seed, std::uint64_t vertex, std::uint64_t phase, StreamTag tag) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ vertex);
  h = mix64(h ^ (phase << 8) ^ static_cast<std::uint64_t>(tag));
  std::seed_seq seq{static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

std::vector<std::uint32_t> random_permutation(std::size_t len, std::uint64_t seed) {
  std::vector<std::uint32_t> perm(len);
  std::iota(perm.begin(), perm.end(), 0u);
  Rng rng = stream(seed, 0, 0, StreamTag::kPermutation);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

bool coin(Rng& rng, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace ftspan
