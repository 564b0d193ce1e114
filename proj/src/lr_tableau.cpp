#include "picketlab/lr_tableau.hpp"

#include <algorithm>

namespace picketlab {

namespace {

// sum_{i >= h} (a_i - b_i), 1-based h.
long long tail_diff(const Partition& a, const Partition& b, int h) {
  long long s = 0;
  const int n = std::max(a.size(), b.size());
  for (int i = h - 1; i < n; ++i) s += a[i] - b[i];
  return s;
}

}  // namespace

const Partition& LRTableau::gamma(int l) const {
  if (l < 0 || l > s())
    throw IndexOutOfRange("LRTableau::gamma: level out of range");
  return chain_[static_cast<std::size_t>(l)];
}

const Partition& LRTableau::gamma_clamped(int l) const {
  if (l < 0) throw IndexOutOfRange("LRTableau::gamma_clamped: negative level");
  return chain_[static_cast<std::size_t>(std::min(l, s()))];
}

Partition LRTableau::alpha() const {
  std::vector<int> alpha_t;
  for (int l = 1; l <= s(); ++l)
    alpha_t.push_back(static_cast<int>(gamma(l).weight() - gamma(l - 1).weight()));
  return transpose(Partition(std::move(alpha_t)));
}

std::optional<TableauError> check_chain(const std::vector<Partition>& chain) {
  if (chain.empty())
    return TableauError(TableauError::Kind::NotIncreasing, 0, -1,
                        "empty chain");
  const int s = static_cast<int>(chain.size()) - 1;
  for (int l = 1; l <= s; ++l) {
    const Partition& prev = chain[static_cast<std::size_t>(l - 1)];
    const Partition& cur = chain[static_cast<std::size_t>(l)];
    if (!contains(cur, prev))
      return TableauError(TableauError::Kind::NotIncreasing, l, -1,
                          "chain is not increasing at step " + std::to_string(l));
    const StripCheck strip = is_horizontal_strip(SkewStrip(cur, prev));
    if (!strip.horizontal)
      return TableauError(TableauError::Kind::NotHorizontalStrip, l,
                          strip.violation_index,
                          "step " + std::to_string(l) + " is not a horizontal strip at row " +
                              std::to_string(strip.violation_index + 1));
    if (l >= 2) {
      const Partition& prev2 = chain[static_cast<std::size_t>(l - 2)];
      const int hmax = std::max(cur.size(), prev.size()) + 1;
      for (int h = 1; h <= hmax; ++h) {
        if (tail_diff(cur, prev, h) > tail_diff(prev, prev2, h))
          return TableauError(TableauError::Kind::LatticeViolation, l, h,
                              "lattice violation at (l=" + std::to_string(l) +
                                  ", h=" + std::to_string(h) + ")");
      }
    }
  }
  // alpha' weakly decreasing is the h = 1 lattice inequality; nothing left.
  return std::nullopt;
}

LRTableau validate(std::vector<Partition> chain) {
  if (auto err = check_chain(chain)) throw *err;
  return LRTableau(std::move(chain));
}

long long count_boxes(const LRTableau& t, int l, int m) {
  if (l < 1 || l > t.s())
    throw IndexOutOfRange("count_boxes: label out of range");
  if (m < 1) throw IndexOutOfRange("count_boxes: row must be >= 1");
  return transpose(t.gamma(l))[m - 1] - transpose(t.gamma(l - 1))[m - 1];
}

SkewStrip reduce(const LRTableau& t, int l) {
  if (l < 1 || l > t.s()) throw IndexOutOfRange("reduce: label out of range");
  return SkewStrip(t.gamma(l), t.gamma(l - 1));
}

namespace {

// All partitions mu with prev <= mu <= bound componentwise, |mu| - |prev| = k,
// and mu - prev a horizontal strip; lexicographically sorted by construction.
void strips_rec(const Partition& prev, const Partition& bound, int k, int row,
                std::vector<int>& acc, std::vector<Partition>& out) {
  const int rows = bound.size();
  if (row == rows) {
    if (k == 0) out.emplace_back(acc);
    return;
  }
  if (k > rows - row) return;  // cannot place the remaining boxes
  for (int add = 1; add >= 0; --add) {  // larger part first: lex order
    if (add > k) continue;
    const int part = prev[row] + add;
    if (part > bound[row]) continue;
    if (row > 0 && part > acc[static_cast<std::size_t>(row - 1)]) continue;
    acc.push_back(part);
    strips_rec(prev, bound, k - add, row + 1, acc, out);
    acc.pop_back();
  }
}

std::vector<Partition> horizontal_strips(const Partition& prev,
                                         const Partition& bound, int k) {
  std::vector<Partition> out;
  if (!contains(bound, prev) || k < 0) return out;
  std::vector<int> acc;
  strips_rec(prev, bound, k, 0, acc, out);
  return out;
}

void enumerate_rec(const Partition& beta, const std::vector<int>& alpha_t,
                   int l, std::vector<Partition>& chain,
                   std::vector<LRTableau>& out) {
  const int s = static_cast<int>(alpha_t.size());
  if (l > s) {
    if (chain.back() == beta)
      out.push_back(validate(chain));
    return;
  }
  // Copy: push_back below may reallocate the chain and invalidate references.
  const Partition prev = chain.back();
  for (Partition& mu :
       horizontal_strips(prev, beta, alpha_t[static_cast<std::size_t>(l - 1)])) {
    if (l >= 2) {
      const Partition& prev2 = chain[chain.size() - 2];
      bool ok = true;
      const int hmax = std::max(mu.size(), prev.size()) + 1;
      for (int h = 1; h <= hmax && ok; ++h)
        ok = tail_diff(mu, prev, h) <= tail_diff(prev, prev2, h);
      if (!ok) continue;
    }
    chain.push_back(std::move(mu));
    enumerate_rec(beta, alpha_t, l + 1, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<LRTableau> enumerate_tableaux(const Partition& alpha,
                                          const Partition& beta,
                                          const Partition& gamma) {
  std::vector<LRTableau> out;
  if (alpha.weight() + gamma.weight() != beta.weight()) return out;
  if (!contains(beta, gamma)) return out;
  const Partition alpha_t = transpose(alpha);
  std::vector<Partition> chain{gamma};
  enumerate_rec(beta, alpha_t.parts(), 1, chain, out);
  std::sort(out.begin(), out.end(),
            [](const LRTableau& a, const LRTableau& b) { return a.chain() < b.chain(); });
  return out;
}

long long lr_coefficient(const Partition& alpha, const Partition& beta,
                         const Partition& gamma) {
  return static_cast<long long>(enumerate_tableaux(alpha, beta, gamma).size());
}

}  // namespace picketlab
