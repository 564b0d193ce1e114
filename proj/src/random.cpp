#include "picketlab/random.hpp"

namespace picketlab {

Embedding random_embedding(std::int64_t p, const Partition& beta, int num_gens,
                           std::uint64_t seed) {
  if (num_gens < 0) throw IndexOutOfRange("random_embedding: num_gens < 0");
  SplitMix64 rng(seed);
  const int n = beta.size();
  MatZ gens(n, num_gens);
  for (int c = 0; c < num_gens; ++c) {
    for (int i = 0; i < n; ++i) {
      std::uint64_t mod = 1;
      for (int e = 0; e < beta[i]; ++e) mod *= static_cast<std::uint64_t>(p);
      gens(i, c) = static_cast<std::int64_t>(rng.below(mod));
    }
  }
  return make_embedding(p, beta, std::move(gens));
}

}  // namespace picketlab
