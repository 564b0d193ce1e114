#include "picketlab/hom.hpp"

#include <algorithm>
#include <functional>

#include "picketlab/random.hpp"

namespace picketlab {

namespace {

std::vector<int> uniform_orders(int n, int m) {
  return std::vector<int>(static_cast<std::size_t>(n), m);
}

// Row-major vectorization; position (i, j) of a t x s matrix goes to i*s + j.
VecZ vectorize(const MatZ& m) {
  VecZ v(m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

MatZ pack_columns(const std::vector<MatZ>& mats, int dim) {
  MatZ out(dim, static_cast<int>(mats.size()));
  for (std::size_t c = 0; c < mats.size(); ++c)
    out.col(static_cast<int>(c)) = vectorize(mats[c]);
  return out;
}

MatZ append_column(const MatZ& m, const VecZ& v) {
  MatZ out(m.rows(), m.cols() + 1);
  out.leftCols(m.cols()) = m;
  out.col(m.cols()) = v;
  return out;
}

// Per-coordinate orders of the flattened space of t x s matrices whose row i
// lives mod p^{row_exp[i]}.
std::vector<int> matrix_orders(const std::vector<int>& row_exp, int cols) {
  std::vector<int> orders;
  orders.reserve(row_exp.size() * static_cast<std::size_t>(cols));
  for (int e : row_exp)
    for (int j = 0; j < cols; ++j) orders.push_back(e);
  return orders;
}

MatZ scale_generators(const Embedding& M, int l) {
  const RingCtx R(M.p, std::max(1, M.beta.part(0)));
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

long long pow_ll(std::int64_t p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

HomSpace hom_to_picket(const Embedding& M, int l, int m) {
  if (l < 0 || m < l) throw IndexOutOfRange("hom_to_picket: need 0 <= l <= m");
  const int n = M.ambient_rank();
  HomSpace out;
  out.target_orders = uniform_orders(n, m);
  if (m == 0 || n == 0) return out;

  const QuotientType qt = type_of_quotient(M.beta, scale_generators(M, l), M.p);
  const Partition& x = qt.type;
  const RingCtx R(M.p, std::max({1, m, M.beta.part(0)}));
  const std::int64_t pm = pow_ll(M.p, m);

  // One cyclic generator per coordinate of B/p^l A, pulled back to B.
  for (int u = 0; u < x.size(); ++u) {
    const std::int64_t inner_mod = pow_ll(M.p, std::min(x[u], m));
    const std::int64_t scale = pow_ll(M.p, std::max(0, m - x[u]));
    MatZ row(1, n);
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      row(0, j) = R.mul(R.reduce(qt.proj(u, j)) % inner_mod, scale) % pm;
      nonzero = nonzero || row(0, j) != 0;
    }
    if (nonzero) out.gens.push_back(std::move(row));
  }
  out.length = hom_length(x, m);
  return out;
}

HomSpace hom_from_picket(std::int64_t p, int q, int m, const Embedding& M) {
  if (q < 0 || m < q) throw IndexOutOfRange("hom_from_picket: need 0 <= q <= m");
  const int n = M.ambient_rank();
  HomSpace out;
  out.target_orders = M.beta.parts();
  if (m == 0 || n == 0) return out;

  const QuotientType qt = type_of_quotient(M.beta, M.gens, M.p);
  const Partition& delta = qt.type;
  const RingCtx R(M.p, std::max({1, m, M.beta.part(0)}));

  std::vector<VecZ> rows;
  std::vector<int> mods;
  // The image b of the cyclic generator must satisfy p^m b = 0 ...
  for (int i = 0; i < n; ++i) {
    if (M.beta[i] <= m) continue;
    VecZ row = VecZ::Zero(n);
    row(i) = pow_ll(p, m);
    rows.push_back(std::move(row));
    mods.push_back(M.beta[i]);
  }
  // ... and p^{m-q} b must lie in the submodule (membership normal form).
  const std::int64_t shift = pow_ll(p, m - q);
  for (int u = 0; u < delta.size(); ++u) {
    VecZ row(n);
    for (int i = 0; i < n; ++i) row(i) = R.mul(shift % R.modulus(), qt.proj(u, i));
    rows.push_back(std::move(row));
    mods.push_back(delta[u]);
  }

  MatZ A(static_cast<int>(rows.size()), n);
  for (std::size_t u = 0; u < rows.size(); ++u) A.row(static_cast<int>(u)) = rows[u];
  const MatZ sols = solve_congruences(A, mods, M.beta.parts(), p);
  for (int j = 0; j < sols.cols(); ++j) out.gens.push_back(sols.col(j));
  out.length = subgroup_length(M.beta.parts(), sols, p);
  return out;
}

HomSpace hom_space(const Embedding& M, const Embedding& N) {
  if (M.p != N.p) throw std::invalid_argument("hom_space: mixed primes");
  const int nm = M.ambient_rank();
  const int nn = N.ambient_rank();
  HomSpace out;
  out.target_orders = matrix_orders(N.beta.parts(), nm);
  if (nm == 0 || nn == 0) return out;

  const std::int64_t p = M.p;
  const int cap = std::max({1, M.beta.part(0), N.beta.part(0)});
  const RingCtx R(p, cap);
  const int vars = nn * nm;
  std::vector<int> var_exp;
  var_exp.reserve(static_cast<std::size_t>(vars));
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nm; ++j) var_exp.push_back(N.beta[i]);

  std::vector<VecZ> rows;
  std::vector<int> mods;
  // R-linearity: the image of a generator of order p^{beta_j} is killed by it.
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nm; ++j) {
      if (M.beta[j] >= N.beta[i]) continue;
      VecZ row = VecZ::Zero(vars);
      row(i * nm + j) = pow_ll(p, M.beta[j]);
      rows.push_back(std::move(row));
      mods.push_back(N.beta[i]);
    }
  }
  // Submodule preservation: f * g lies in the submodule of N, tested through
  // the quotient map of N.
  const QuotientType qtn = type_of_quotient(N.beta, N.gens, p);
  for (int c = 0; c < M.num_gens(); ++c) {
    for (int u = 0; u < qtn.type.size(); ++u) {
      VecZ row = VecZ::Zero(vars);
      for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nm; ++j)
          row(i * nm + j) = R.mul(qtn.proj(u, i), R.reduce(M.gens(j, c)));
      rows.push_back(std::move(row));
      mods.push_back(qtn.type[u]);
    }
  }

  MatZ A(static_cast<int>(rows.size()), vars);
  for (std::size_t u = 0; u < rows.size(); ++u) A.row(static_cast<int>(u)) = rows[u];
  const MatZ sols = solve_congruences(A, mods, var_exp, p);
  for (int c = 0; c < sols.cols(); ++c) {
    MatZ f(nn, nm);
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nm; ++j) f(i, j) = sols(i * nm + j, c);
    out.gens.push_back(std::move(f));
  }
  out.length = subgroup_length(var_exp, sols, p);
  return out;
}

namespace {

// Im Hom_S(M, g_l^m): compositions of Hom(M, source summand) with the
// component inclusions, as 1 x n rows mod p^m.
std::vector<MatZ> image_of_g(const Embedding& M, int l, int m) {
  const PicketMorphism g = make_g(M.p, l, m);
  const std::int64_t pm = pow_ll(M.p, m);
  std::vector<MatZ> im;
  for (std::size_t c = 0; c < g.source.size(); ++c) {
    const HomSpace hs = hom_to_picket(M, g.source[c].l, g.source[c].m);
    for (const MatZ& r : hs.gens) {
      MatZ comp(1, r.cols());
      for (int j = 0; j < r.cols(); ++j)
        comp(0, j) = static_cast<std::int64_t>(
            static_cast<__int128>(g.scalars[c]) * r(0, j) % pm);
      im.push_back(std::move(comp));
    }
  }
  return im;
}

// Im Hom_S(h_q^m, M): precompositions of Hom(target summand, M) with the
// component epimorphisms (scalar 1), as n x 1 columns.
std::vector<MatZ> image_of_h(const Embedding& M, int q, int m) {
  const PicketMorphism h = make_h(M.p, q, m);
  std::vector<MatZ> im;
  for (const Picket& t : h.target) {
    const HomSpace hs = hom_from_picket(M.p, t.l, t.m, M);
    im.insert(im.end(), hs.gens.begin(), hs.gens.end());
  }
  return im;
}

void check_elementary(const std::vector<int>& orders, const std::vector<MatZ>& hom,
                      const std::vector<MatZ>& im, long long len_im,
                      std::int64_t p, int dim) {
  if (dim == 0) return;
  std::vector<MatZ> extended = im;
  for (const MatZ& f : hom) {
    MatZ pf = f;
    for (int i = 0; i < pf.rows(); ++i)
      for (int j = 0; j < pf.cols(); ++j)
        pf(i, j) = static_cast<std::int64_t>(static_cast<__int128>(p) * pf(i, j));
    extended.push_back(std::move(pf));
  }
  const int dimv = static_cast<int>(orders.size());
  if (subgroup_length(orders, pack_columns(extended, dimv), p) != len_im)
    throw RouteDisagreement("quotient by the image is not elementary abelian");
}

}  // namespace

QuotientReport quotient_dim_to_picket(const Embedding& M, int l, int m,
                                      RouteSet routes) {
  if (l < 1 || m < l)
    throw IndexOutOfRange("quotient_dim_to_picket: need 1 <= l <= m");
  QuotientReport rep;
  rep.l = l;
  rep.m = m;

  if (routes.formula) {
    const std::vector<Partition> chain = gamma_chain(M);
    const int s = static_cast<int>(chain.size()) - 1;
    const Partition& xl = chain[static_cast<std::size_t>(std::min(l, s))];
    const Partition& xl1 = chain[static_cast<std::size_t>(std::min(l - 1, s))];
    rep.formula = (l < m) ? hom_length(xl, m) - hom_length(xl, m - 1) -
                                hom_length(xl1, m) + hom_length(xl1, m - 1)
                          : hom_length(xl, m) - hom_length(xl1, m);
  }
  if (routes.subfactor) {
    const std::map<Picket, int> summands = decompose_s1(subfactor(M, l));
    const auto it = summands.find(Picket{1, m});
    rep.subfactor = it == summands.end() ? 0 : it->second;
  }
  if (routes.oracle) {
    const HomSpace hom = hom_to_picket(M, l, m);
    const std::vector<MatZ> im = image_of_g(M, l, m);
    const std::vector<int> orders = uniform_orders(M.ambient_rank(), m);
    const int dimv = static_cast<int>(orders.size());
    const long long len_im = subgroup_length(orders, pack_columns(im, dimv), M.p);
    rep.oracle = hom.length - len_im;
    check_elementary(orders, hom.gens, im, len_im, M.p,
                     static_cast<int>(rep.oracle));
  }

  long long value = -1;
  for (long long v : {rep.formula, rep.subfactor, rep.oracle}) {
    if (v < 0) continue;
    if (value < 0) value = v;
    if (v != value)
      throw RouteDisagreement("quotient_dim_to_picket: routes disagree at (l=" +
                              std::to_string(l) + ", m=" + std::to_string(m) + ")");
  }
  rep.dim = value;
  return rep;
}

QuotientReport quotient_dim_from_picket(const Embedding& M, int q, int m,
                                        RouteSet routes) {
  if (q < 0 || m < q || m < 1)
    throw IndexOutOfRange("quotient_dim_from_picket: need 0 <= q <= m, m >= 1");
  QuotientReport rep;
  rep.l = m - q;
  rep.m = m;

  // The tableau and subfactor routes read the dual embedding; they need the
  // box label m - q >= 1, so q = m is oracle-only.
  if (q < m && (routes.formula || routes.subfactor)) {
    const Embedding D = dual(M);
    if (routes.formula) {
      const std::vector<Partition> chain = gamma_chain(D);
      const int s = static_cast<int>(chain.size()) - 1;
      const int l = m - q;
      const Partition& xl = chain[static_cast<std::size_t>(std::min(l, s))];
      const Partition& xl1 = chain[static_cast<std::size_t>(std::min(l - 1, s))];
      rep.formula = (l < m) ? hom_length(xl, m) - hom_length(xl, m - 1) -
                                  hom_length(xl1, m) + hom_length(xl1, m - 1)
                            : hom_length(xl, m) - hom_length(xl1, m);
    }
    if (routes.subfactor) {
      const std::map<Picket, int> summands = decompose_s1(subfactor(D, m - q));
      const auto it = summands.find(Picket{1, m});
      rep.subfactor = it == summands.end() ? 0 : it->second;
    }
  }
  if (routes.oracle) {
    const HomSpace hom = hom_from_picket(M.p, q, m, M);
    const std::vector<MatZ> im = image_of_h(M, q, m);
    const std::vector<int>& orders = M.beta.parts();
    const int dimv = static_cast<int>(orders.size());
    const long long len_im = subgroup_length(orders, pack_columns(im, dimv), M.p);
    rep.oracle = hom.length - len_im;
    check_elementary(orders, hom.gens, im, len_im, M.p,
                     static_cast<int>(rep.oracle));
  }

  long long value = -1;
  for (long long v : {rep.formula, rep.subfactor, rep.oracle}) {
    if (v < 0) continue;
    if (value < 0) value = v;
    if (v != value)
      throw RouteDisagreement("quotient_dim_from_picket: routes disagree at (q=" +
                              std::to_string(q) + ", m=" + std::to_string(m) + ")");
  }
  rep.dim = value;
  return rep;
}

namespace {

struct CosetSpace {
  std::vector<int> orders;
  MatZ im_cols;       // packed image generators
  long long im_len = 0;
  std::int64_t p = 2;

  bool in_image(const MatZ& f) const {
    if (f.size() == 0) return true;
    VecZ v = vectorize(f);
    bool nonzero = false;
    for (int i = 0; i < v.size(); ++i) nonzero = nonzero || v(i) != 0;
    if (!nonzero) return true;
    return subgroup_length(orders, append_column(im_cols, v), p) == im_len;
  }
};

CosetSpace make_coset_space(std::vector<int> orders, const std::vector<MatZ>& im,
                            std::int64_t p) {
  CosetSpace cs;
  cs.p = p;
  cs.im_cols = pack_columns(im, static_cast<int>(orders.size()));
  cs.im_len = subgroup_length(orders, cs.im_cols, p);
  cs.orders = std::move(orders);
  return cs;
}

// f = sum_i coeff_i * gens_i with entries reduced mod p^{orders}.
MatZ combine(const std::vector<MatZ>& gens, const std::vector<int>& coeffs,
             const std::vector<int>& orders, std::int64_t p) {
  MatZ acc = MatZ::Zero(gens[0].rows(), gens[0].cols());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (coeffs[i] == 0) continue;
    acc += static_cast<std::int64_t>(coeffs[i]) * gens[i];
  }
  int idx = 0;
  for (int r = 0; r < acc.rows(); ++r)
    for (int c = 0; c < acc.cols(); ++c, ++idx)
      acc(r, c) %= pow_ll(p, orders[static_cast<std::size_t>(idx)]);
  return acc;
}

// Enumerates (or samples, past the cap) coefficient tuples in [0, p)^k and
// hands each resulting representative to `visit`.
void sweep_cosets(int k, std::int64_t p, const PairingOptions& opts,
                  const std::function<void(const std::vector<int>&)>& visit) {
  long long total = 1;
  bool overflow = false;
  for (int i = 0; i < k; ++i) {
    total *= p;
    if (total > opts.max_cosets) {
      overflow = true;
      break;
    }
  }
  std::vector<int> coeffs(static_cast<std::size_t>(k), 0);
  if (!overflow) {
    for (long long code = 1; code < total; ++code) {
      long long c = code;
      for (int i = 0; i < k; ++i) {
        coeffs[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      visit(coeffs);
    }
    return;
  }
  SplitMix64 rng(opts.sample_seed);
  for (long long draw = 0; draw < opts.max_cosets; ++draw) {
    bool nonzero = false;
    for (int i = 0; i < k; ++i) {
      coeffs[static_cast<std::size_t>(i)] =
          static_cast<int>(rng.below(static_cast<std::uint64_t>(p)));
      nonzero = nonzero || coeffs[static_cast<std::size_t>(i)] != 0;
    }
    if (nonzero) visit(coeffs);
  }
}

}  // namespace

PairingReport pairing_left(int n, int l, int m, const Embedding& M,
                           PairingOptions opts) {
  if (M.beta.part(0) > n) throw NotInSn("pairing_left: p^n B != 0");
  if (l < 1 || m < l || n < m)
    throw IndexOutOfRange("pairing_left: need 1 <= l <= m <= n");
  PairingReport rep;
  const Embedding C = construct_c(M.p, n, l, m);

  rep.picket_dim_ok = quotient_dim_to_picket(C, l, m).dim == 1;

  const HomSpace hom_m = hom_to_picket(M, l, m);
  const CosetSpace csm = make_coset_space(uniform_orders(M.ambient_rank(), m),
                                          image_of_g(M, l, m), M.p);
  rep.quotient_dim = hom_m.length - csm.im_len;
  if (rep.quotient_dim == 0 || hom_m.gens.empty()) {
    rep.vacuous = true;
    return rep;
  }

  const CosetSpace csc = make_coset_space(uniform_orders(C.ambient_rank(), m),
                                          image_of_g(C, l, m), C.p);
  const std::vector<MatZ> qs = hom_space(C, M).gens;  // maps C -> M
  const std::int64_t pm = pow_ll(M.p, m);

  sweep_cosets(static_cast<int>(hom_m.gens.size()), M.p, opts,
               [&](const std::vector<int>& coeffs) {
                 const MatZ r = combine(hom_m.gens, coeffs, csm.orders, M.p);
                 if (csm.in_image(r)) return;  // zero coset
                 ++rep.cosets_checked;
                 for (const MatZ& q : qs) {
                   MatZ comp(1, q.cols());
                   for (int c = 0; c < q.cols(); ++c) {
                     __int128 acc = 0;
                     for (int j = 0; j < q.rows(); ++j)
                       acc += static_cast<__int128>(r(0, j)) * q(j, c);
                     comp(0, c) = static_cast<std::int64_t>(acc % pm);
                   }
                   if (!csc.in_image(comp)) return;  // witness found
                 }
                 ++rep.failures;
               });
  return rep;
}

PairingReport pairing_right(int n, int q, int m, const Embedding& M,
                            PairingOptions opts) {
  if (M.beta.part(0) > n) throw NotInSn("pairing_right: p^n B != 0");
  if (q < 0 || m <= q || n < m)
    throw IndexOutOfRange("pairing_right: need 0 <= q < m <= n");
  PairingReport rep;
  const Embedding A = construct_a(M.p, n, q, m);

  rep.picket_dim_ok = quotient_dim_from_picket(A, q, m).dim == 1;

  const HomSpace hom_m = hom_from_picket(M.p, q, m, M);
  const CosetSpace csm =
      make_coset_space(M.beta.parts(), image_of_h(M, q, m), M.p);
  rep.quotient_dim = hom_m.length - csm.im_len;
  if (rep.quotient_dim == 0 || hom_m.gens.empty()) {
    rep.vacuous = true;
    return rep;
  }

  const CosetSpace csa =
      make_coset_space(A.beta.parts(), image_of_h(A, q, m), A.p);
  const std::vector<MatZ> ts = hom_space(M, A).gens;  // maps M -> A
  const int na = A.ambient_rank();

  sweep_cosets(static_cast<int>(hom_m.gens.size()), M.p, opts,
               [&](const std::vector<int>& coeffs) {
                 const MatZ r = combine(hom_m.gens, coeffs, csm.orders, M.p);
                 if (csm.in_image(r)) return;
                 ++rep.cosets_checked;
                 for (const MatZ& t : ts) {
                   MatZ comp(na, 1);
                   for (int i = 0; i < na; ++i) {
                     __int128 acc = 0;
                     for (int j = 0; j < t.cols(); ++j)
                       acc += static_cast<__int128>(t(i, j)) * r(j, 0);
                     comp(i, 0) = static_cast<std::int64_t>(
                         acc % pow_ll(A.p, A.beta[i]));
                   }
                   if (!csa.in_image(comp)) return;
                 }
                 ++rep.failures;
               });
  return rep;
}

}  // namespace picketlab
