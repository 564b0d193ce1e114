#include "picketlab/embedding.hpp"

#include <algorithm>

namespace picketlab {

namespace {

int working_cap(const Embedding& M) { return std::max(1, M.beta.part(0)); }

MatZ canonicalize(const Partition& beta, const MatZ& gens, const RingCtx& R) {
  MatZ out = gens;
  for (int i = 0; i < out.rows(); ++i) {
    const std::int64_t m = R.pow(beta[i]);
    for (int j = 0; j < out.cols(); ++j) out(i, j) = R.reduce(out(i, j)) % m;
  }
  return out;
}

// p^l * gens, reduced mod p^{beta_i}.
MatZ scaled_gens(const Embedding& M, int l) {
  const RingCtx R(M.p, working_cap(M));
  MatZ out = M.gens;
  for (int i = 0; i < out.rows(); ++i) {
    const std::int64_t m = R.pow(M.beta[i]);
    for (int j = 0; j < out.cols(); ++j) {
      std::int64_t v = R.reduce(out(i, j));
      for (int e = 0; e < l && v != 0; ++e) v = R.mul(M.p, v) % m;
      out(i, j) = v;
    }
  }
  return out;
}

}  // namespace

Embedding make_embedding(std::int64_t p, Partition beta, MatZ gens) {
  if (gens.size() == 0) gens = MatZ(beta.size(), gens.cols() > 0 ? gens.cols() : 0);
  if (gens.rows() != beta.size())
    throw EntryOutOfRange("make_embedding: generator rows must match beta");
  const RingCtx R(p, std::max(1, beta.part(0)));
  MatZ canon = canonicalize(beta, gens, R);
  return Embedding{p, std::move(beta), std::move(canon)};
}

Embedding picket_embedding(std::int64_t p, int l, int m) {
  if (m < 1 || l < 0 || l > m)
    throw IndexOutOfRange("picket: need 0 <= l <= m, m >= 1");
  const RingCtx R(p, m);
  if (l == 0) return Embedding{p, Partition({m}), MatZ(1, 0)};
  MatZ g(1, 1);
  g(0, 0) = R.pow(m - l);
  return Embedding{p, Partition({m}), g};
}

std::vector<Partition> gamma_chain(const Embedding& M) {
  std::vector<Partition> chain;
  for (int l = 0; l <= std::max(1, M.beta.part(0)); ++l) {
    chain.push_back(type_of_quotient(M.beta, scaled_gens(M, l), M.p).type);
    if (chain.back() == M.beta) return chain;  // p^l A = 0
  }
  throw std::logic_error("gamma_chain: chain failed to stabilize");
}

LRTableau lr_tableau_of(const Embedding& M) { return validate(gamma_chain(M)); }

Partition alpha_of(const Embedding& M) { return lr_tableau_of(M).alpha(); }

Partition gamma_of(const Embedding& M) {
  return type_of_quotient(M.beta, M.gens, M.p).type;
}

Embedding subfactor(const Embedding& M, int l) {
  if (l < 1) throw IndexOutOfRange("subfactor: l must be >= 1");
  const RingCtx R(M.p, working_cap(M));
  const QuotientType qt = type_of_quotient(M.beta, scaled_gens(M, l), M.p);
  const MatZ pushed = mul_mod(qt.proj, scaled_gens(M, l - 1), R);
  return make_embedding(M.p, qt.type, pushed);
}

std::map<Picket, int> decompose_s1(const Embedding& M) {
  const RingCtx R(M.p, working_cap(M));
  for (int i = 0; i < M.gens.rows(); ++i)
    for (int j = 0; j < M.gens.cols(); ++j)
      if (M.gens(i, j) != 0 && R.valuation(M.gens(i, j)) < M.beta[i] - 1)
        throw NotSemisimpleSubmodule("decompose_s1: p·A != 0");
  const Partition gamma = gamma_of(M);
  std::map<Picket, int> out;
  for (int i = 0; i < M.beta.size(); ++i) {
    const int d = M.beta[i] - gamma[i];
    if (d < 0 || d > 1)
      throw std::logic_error("decompose_s1: beta - gamma is not a strip");
    ++out[Picket{d, M.beta[i]}];
  }
  return out;
}

Embedding dual(const Embedding& M) {
  if (M.beta.empty()) return M;
  return make_embedding(M.p, M.beta, annihilator(M.beta, M.gens, M.p));
}

Embedding construct_c(std::int64_t p, int n, int l, int m) {
  if (!(1 <= l && l <= m && m <= n))
    throw IndexOutOfRange("construct_c: need 1 <= l <= m <= n");
  if (l == m) return picket_embedding(p, n, n);
  const RingCtx R(p, n);
  if (l == 1) {
    MatZ g(1, 1);
    g(0, 0) = R.pow(m - 1);
    return make_embedding(p, Partition({n}), g);
  }
  MatZ g(2, 1);
  g(0, 0) = R.pow(m - l);
  g(1, 0) = RingCtx(p, l - 1).pow(l - 1) - 1;  // -1 mod p^{l-1}
  return make_embedding(p, Partition({n, l - 1}), g);
}

Embedding construct_a(std::int64_t p, int n, int q, int m) {
  if (!(0 <= q && q < m && m <= n))
    throw IndexOutOfRange("construct_a: need 0 <= q < m <= n");
  if (q == 0) return picket_embedding(p, 0, n);
  return dual(construct_c(p, n, m - q, m));
}

PicketMorphism make_g(std::int64_t p, int l, int m) {
  if (m < 1 || l < 0 || l > m)
    throw IndexOutOfRange("make_g: need 0 <= l <= m, m >= 1");
  PicketMorphism g;
  g.kind = 'g';
  g.idx = l;
  g.m = m;
  g.target = {Picket{l, m}};
  if (l == m) {
    g.source = {Picket{m - 1, m}};
    g.scalars = {1};
  } else if (l == 0) {
    g.source = {Picket{0, m - 1}};
    g.scalars = {p};
  } else {
    g.source = {Picket{l - 1, m}, Picket{l, m - 1}};
    g.scalars = {1, p};
  }
  return g;
}

PicketMorphism make_h(std::int64_t p, int q, int m) {
  if (m < 1 || q < 0 || q > m)
    throw IndexOutOfRange("make_h: need 0 <= q <= m, m >= 1");
  PicketMorphism h;
  h.kind = 'h';
  h.idx = q;
  h.m = m;
  h.source = {Picket{q, m}};
  if (q == 0) {
    h.target = {Picket{1, m}};
    h.scalars = {1};
  } else if (q == m) {
    h.target = {Picket{m - 1, m - 1}};
    h.scalars = {1};
  } else {
    h.target = {Picket{q - 1, m - 1}, Picket{q + 1, m}};
    h.scalars = {1, 1};
  }
  return h;
}

}  // namespace picketlab
