#pragma once

#include <cstdint>

#include "picketlab/embedding.hpp"

namespace picketlab {

// splitmix64: a fixed 64-bit mix-based stream so that identical seeds give
// byte-identical output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

// Deterministic pseudo-random generator matrix: entries uniform mod p^{beta_i},
// drawn row-major one generator column at a time.
Embedding random_embedding(std::int64_t p, const Partition& beta, int num_gens,
                           std::uint64_t seed);

}  // namespace picketlab
