#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "picketlab/errors.hpp"

namespace picketlab {

// Dense integer matrix; entries are representatives in [0, p^cap).
using MatZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// Arithmetic context for the chain ring Z/p^cap.
class RingCtx {
 public:
  RingCtx(std::int64_t p, int cap);

  std::int64_t p() const { return p_; }
  int cap() const { return cap_; }
  std::int64_t modulus() const { return powers_[cap_]; }
  std::int64_t pow(int e) const { return powers_.at(e); }

  std::int64_t reduce(std::int64_t v) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;

  // Largest e <= cap with p^e | v; cap for v == 0.
  int valuation(std::int64_t v) const;

  // Inverse of a unit (valuation 0).
  std::int64_t unit_inverse(std::int64_t u) const;

 private:
  std::int64_t p_;
  int cap_;
  std::vector<std::int64_t> powers_;  // p^0 .. p^cap
};

inline int valuation(std::int64_t v, const RingCtx& R) { return R.valuation(v); }

struct SnfResult {
  // Weakly increasing, one entry per diagonal position min(rows, cols).
  std::vector<int> diag_valuations;
  MatZ left;   // rows x rows, invertible mod p
  MatZ right;  // cols x cols, invertible mod p
};

// left * a * right = diag(p^{diag_valuations[i]})  (mod p^cap).
SnfResult snf(const MatZ& a, const RingCtx& R);

// Columns generate { x : a * x == 0 mod p^cap } as a submodule of (Z/p^cap)^cols.
MatZ kernel_mod(const MatZ& a, const RingCtx& R);

MatZ mul_mod(const MatZ& a, const MatZ& b, const RingCtx& R);

// Determinant has valuation 0 (test helper for transform invertibility).
bool is_unit_matrix(const MatZ& a, const RingCtx& R);

}  // namespace picketlab
