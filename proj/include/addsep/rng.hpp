#pragma once

#include <cstdint>

namespace addsep {

// SplitMix64. Small, seedable and splittable: split(i) derives an
// independent stream for work item i, so parallel workers never share state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  Rng split(std::uint64_t index) const {
    Rng mix(state_ ^ (index * 0xd1b54a32d192ed03ULL));
    return Rng(mix.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace addsep
