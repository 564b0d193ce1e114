#include "picketlab/ring.hpp"

#include <limits>

namespace picketlab {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

RingCtx::RingCtx(std::int64_t p, int cap) : p_(p), cap_(cap) {
  if (!is_prime(p)) throw std::invalid_argument("RingCtx: p must be prime");
  if (cap < 1) throw std::invalid_argument("RingCtx: cap must be >= 1");
  powers_.reserve(static_cast<std::size_t>(cap) + 1);
  powers_.push_back(1);
  const std::int64_t limit = std::numeric_limits<std::int64_t>::max() / 2;
  for (int e = 1; e <= cap; ++e) {
    if (powers_.back() > limit / p)
      throw std::invalid_argument("RingCtx: p^cap exceeds the 63-bit range");
    powers_.push_back(powers_.back() * p);
  }
}

std::int64_t RingCtx::reduce(std::int64_t v) const {
  std::int64_t r = v % modulus();
  return r < 0 ? r + modulus() : r;
}

std::int64_t RingCtx::mul(std::int64_t a, std::int64_t b) const {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * b % modulus());
}

std::int64_t RingCtx::add(std::int64_t a, std::int64_t b) const {
  return reduce(a % modulus() + b % modulus());
}

std::int64_t RingCtx::sub(std::int64_t a, std::int64_t b) const {
  return reduce(a % modulus() - b % modulus());
}

int RingCtx::valuation(std::int64_t v) const {
  v = reduce(v);
  if (v == 0) return cap_;
  int e = 0;
  while (v % p_ == 0) {
    v /= p_;
    ++e;
  }
  return e;
}

std::int64_t RingCtx::unit_inverse(std::int64_t u) const {
  u = reduce(u);
  if (valuation(u) != 0)
    throw std::invalid_argument("unit_inverse: element is not a unit");
  // Extended Euclid on (u, p^cap).
  std::int64_t r0 = modulus(), r1 = u;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

SnfResult snf(const MatZ& a, const RingCtx& R) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  MatZ A = a;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = R.reduce(A(i, j));

  SnfResult out;
  out.left = MatZ::Identity(rows, rows);
  out.right = MatZ::Identity(cols, cols);
  const int steps = std::min(rows, cols);
  out.diag_valuations.assign(static_cast<std::size_t>(steps), R.cap());

  for (int k = 0; k < steps; ++k) {
    // Pivot: minimal valuation, tie-broken topmost then leftmost.
    int pi = -1, pj = -1, pval = R.cap() + 1;
    for (int i = k; i < rows; ++i) {
      for (int j = k; j < cols; ++j) {
        int v = R.valuation(A(i, j));
        if (v < pval) {
          pval = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (pval >= R.cap()) break;  // remaining block is zero
    if (pi != k) {
      A.row(k).swap(A.row(pi));
      out.left.row(k).swap(out.left.row(pi));
    }
    if (pj != k) {
      A.col(k).swap(A.col(pj));
      out.right.col(k).swap(out.right.col(pj));
    }
    // Normalize the pivot to p^pval.
    const std::int64_t unit = A(k, k) / R.pow(pval);
    const std::int64_t uinv = R.unit_inverse(unit);
    for (int j = 0; j < cols; ++j) A(k, j) = R.mul(uinv, A(k, j));
    for (int j = 0; j < rows; ++j) out.left(k, j) = R.mul(uinv, out.left(k, j));
    // Clear below: every entry has valuation >= pval.
    for (int i = k + 1; i < rows; ++i) {
      const std::int64_t q = A(i, k) / R.pow(pval);
      if (q == 0) continue;
      for (int j = 0; j < cols; ++j) A(i, j) = R.sub(A(i, j), R.mul(q, A(k, j)));
      for (int j = 0; j < rows; ++j)
        out.left(i, j) = R.sub(out.left(i, j), R.mul(q, out.left(k, j)));
    }
    // Clear to the right (column k below row k is already zero).
    for (int j = k + 1; j < cols; ++j) {
      const std::int64_t q = A(k, j) / R.pow(pval);
      if (q == 0) continue;
      A(k, j) = R.sub(A(k, j), R.mul(q, A(k, k)));
      for (int i = 0; i < cols; ++i)
        out.right(i, j) = R.sub(out.right(i, j), R.mul(q, out.right(i, k)));
    }
    out.diag_valuations[static_cast<std::size_t>(k)] = pval;
  }
  return out;
}

MatZ kernel_mod(const MatZ& a, const RingCtx& R) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  if (cols == 0) return MatZ(0, 0);
  if (rows == 0) return MatZ::Identity(cols, cols);
  SnfResult s = snf(a, R);
  MatZ gens(cols, cols);
  int out = 0;
  for (int i = 0; i < cols; ++i) {
    const int e = i < std::min(rows, cols)
                      ? s.diag_valuations[static_cast<std::size_t>(i)]
                      : R.cap();
    const std::int64_t scale = R.pow(R.cap() - e);
    bool nonzero = false;
    for (int r = 0; r < cols; ++r) {
      gens(r, out) = R.mul(scale, s.right(r, i));
      nonzero = nonzero || gens(r, out) != 0;
    }
    if (nonzero) ++out;
  }
  gens.conservativeResize(cols, out);
  return gens;
}

MatZ mul_mod(const MatZ& a, const MatZ& b, const RingCtx& R) {
  MatZ c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      __int128 acc = 0;
      for (int k = 0; k < a.cols(); ++k)
        acc += static_cast<__int128>(R.reduce(a(i, k))) * R.reduce(b(k, j));
      c(i, j) = static_cast<std::int64_t>(acc % R.modulus());
    }
  }
  return c;
}

bool is_unit_matrix(const MatZ& a, const RingCtx& R) {
  if (a.rows() != a.cols()) return false;
  // Rank over the residue field k = Z/p.
  const std::int64_t p = R.p();
  const int n = static_cast<int>(a.rows());
  MatZ m = a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = R.reduce(m(i, j)) % p;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    m.row(rank).swap(m.row(pivot));
    // Scale to 1 mod p.
    std::int64_t inv = 1;
    for (std::int64_t x = 1; x < p; ++x)
      if (x * m(rank, col) % p == 1) {
        inv = x;
        break;
      }
    for (int j = 0; j < n; ++j) m(rank, j) = m(rank, j) * inv % p;
    for (int i = 0; i < n; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      const std::int64_t f = m(i, col);
      for (int j = 0; j < n; ++j)
        m(i, j) = ((m(i, j) - f * m(rank, j)) % p + p * p) % p;
    }
    ++rank;
  }
  return rank == n;
}

}  // namespace picketlab
