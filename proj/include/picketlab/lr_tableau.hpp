#pragma once

#include <optional>
#include <vector>

#include "picketlab/partition.hpp"

namespace picketlab {

// Increasing chain of partitions [gamma^0, ..., gamma^s] whose consecutive
// skews are horizontal strips and which satisfies the lattice permutation
// property.  The derived type is (alpha, beta, gamma) with gamma = gamma^0,
// beta = gamma^s and alpha'_l = |gamma^l - gamma^{l-1}|.
class LRTableau {
 public:
  const std::vector<Partition>& chain() const { return chain_; }
  int s() const { return static_cast<int>(chain_.size()) - 1; }

  const Partition& gamma(int l) const;
  // Reads gamma^s for l > s: rows beyond the chain carry no further boxes.
  const Partition& gamma_clamped(int l) const;

  Partition alpha() const;
  const Partition& beta() const { return chain_.back(); }
  const Partition& gamma0() const { return chain_.front(); }

  bool operator==(const LRTableau&) const = default;

  friend LRTableau validate(std::vector<Partition> chain);

 private:
  explicit LRTableau(std::vector<Partition> c) : chain_(std::move(c)) {}
  std::vector<Partition> chain_;
};

// nullopt iff the chain is a valid LR-tableau.
std::optional<TableauError> check_chain(const std::vector<Partition>& chain);

// Throws TableauError (NotIncreasing / NotHorizontalStrip / LatticeViolation)
// with the first failing position.
LRTableau validate(std::vector<Partition> chain);

// Number of boxes labelled l in row m:  (gamma^l)'_m - (gamma^{l-1})'_m.
// 1 <= l <= s; m beyond the diagram returns 0.
long long count_boxes(const LRTableau& t, int l, int m);

// The skew [gamma^{l-1}, gamma^l]: the tableau of the reduced embedding.
SkewStrip reduce(const LRTableau& t, int l);

// All LR-tableaux of type (alpha, beta, gamma), deduplicated, in a
// deterministic (lexicographic) order.  Empty unless |alpha|+|gamma| = |beta|.
std::vector<LRTableau> enumerate_tableaux(const Partition& alpha,
                                          const Partition& beta,
                                          const Partition& gamma);

long long lr_coefficient(const Partition& alpha, const Partition& beta,
                         const Partition& gamma);

}  // namespace picketlab
