#ifndef BRACEFORGE_RNG_HPP
#define BRACEFORGE_RNG_HPP

#include <cstdint>

namespace braceforge {

// splitmix64; deterministic across platforms, unlike the std distributions.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform-ish in [0,n); bias is irrelevant at the sizes used here
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

} // namespace braceforge

#endif
