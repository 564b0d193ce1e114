#include "picketlab/modules.hpp"

#include <algorithm>
#include <numeric>

namespace picketlab {

namespace {

int max_exp(const std::vector<int>& exps) {
  int m = 1;
  for (int e : exps) m = std::max(m, e);
  return m;
}

}  // namespace

QuotientType type_of_quotient(const std::vector<int>& ambient,
                              const MatZ& relations, std::int64_t p) {
  const int r = static_cast<int>(ambient.size());
  if (r == 0) return QuotientType{Partition(), MatZ(0, 0)};
  const RingCtx R(p, max_exp(ambient));
  const int k = static_cast<int>(relations.cols());

  // Present the ambient group as (Z/p^cap)^r modulo diag(p^{ambient_i}),
  // then adjoin the given relators.
  MatZ combined(r, r + k);
  combined.setZero();
  for (int i = 0; i < r; ++i) combined(i, i) = R.pow(ambient[static_cast<std::size_t>(i)]) % R.modulus();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) combined(i, r + j) = R.reduce(relations(i, j));

  SnfResult s = snf(combined, R);

  // Diagonal valuations are weakly increasing; the quotient type lists the
  // nonzero ones in decreasing order, with the matching rows of `left` as the
  // coordinate surjection.
  std::vector<int> type;
  std::vector<int> rows;
  for (int i = r - 1; i >= 0; --i) {
    const int e = s.diag_valuations[static_cast<std::size_t>(i)];
    if (e > 0) {
      type.push_back(e);
      rows.push_back(i);
    }
  }
  MatZ proj(static_cast<int>(rows.size()), r);
  for (std::size_t u = 0; u < rows.size(); ++u)
    proj.row(static_cast<int>(u)) = s.left.row(rows[u]);
  return QuotientType{Partition(std::move(type)), std::move(proj)};
}

QuotientType type_of_quotient(const Partition& ambient, const MatZ& relations,
                              std::int64_t p) {
  return type_of_quotient(ambient.parts(), relations, p);
}

long long subgroup_length(const std::vector<int>& ambient, const MatZ& gens,
                          std::int64_t p) {
  long long total = std::accumulate(ambient.begin(), ambient.end(), 0ll);
  return total - type_of_quotient(ambient, gens, p).type.weight();
}

long long hom_length(const Partition& x, int m) {
  if (m < 0) throw IndexOutOfRange("hom_length: negative picket length");
  long long s = 0;
  for (int i = 0; i < x.size(); ++i) s += std::min(x[i], m);
  return s;
}

long long row_via_homs(const Partition& x, int m) {
  if (m < 1) throw IndexOutOfRange("row_via_homs: row must be >= 1");
  return hom_length(x, m) - hom_length(x, m - 1);
}

FLModule dual_coordinates(const FLModule& m) { return m; }

MatZ solve_congruences(const MatZ& A, const std::vector<int>& mod_exp,
                       const std::vector<int>& var_exp, std::int64_t p) {
  const int vars = static_cast<int>(var_exp.size());
  const int rows = static_cast<int>(mod_exp.size());
  int cap = max_exp(var_exp);
  for (int e : mod_exp) cap = std::max(cap, e);
  const RingCtx R(p, cap);

  // Scale row u by p^{cap - d_u}: the system becomes homogeneous mod p^cap,
  // and its kernel in the free module projects onto the solution subgroup.
  MatZ scaled(rows, vars);
  for (int u = 0; u < rows; ++u) {
    const std::int64_t f = R.pow(cap - mod_exp[static_cast<std::size_t>(u)]);
    for (int sv = 0; sv < vars; ++sv)
      scaled(u, sv) = R.mul(f, A(u, sv));
  }
  MatZ gens = kernel_mod(scaled, R);
  // Reduce to canonical representatives in ⊕ Z/p^{var_exp[s]}, dropping
  // generators that project to zero.
  int out = 0;
  for (int j = 0; j < gens.cols(); ++j) {
    bool nonzero = false;
    for (int i = 0; i < vars; ++i) {
      gens(i, j) = R.reduce(gens(i, j)) % R.pow(var_exp[static_cast<std::size_t>(i)]);
      nonzero = nonzero || gens(i, j) != 0;
    }
    if (nonzero) {
      if (out != j) gens.col(out) = gens.col(j);
      ++out;
    }
  }
  gens.conservativeResize(vars, out);
  return gens;
}

MatZ annihilator(const Partition& lambda, const MatZ& gens, std::int64_t p) {
  const int r = lambda.size();
  if (r == 0) return MatZ(0, 0);
  const int cap = lambda.part(0);
  const RingCtx R(p, cap);
  const int k = static_cast<int>(gens.cols());
  // <y, g> = sum_i y_i g_i p^{cap - lambda_i} == 0 mod p^cap, per generator.
  MatZ A(k, r);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < r; ++i)
      A(j, i) = R.mul(R.reduce(gens(i, j)), R.pow(cap - lambda[i]));
  std::vector<int> mods(static_cast<std::size_t>(k), cap);
  return solve_congruences(A, mods, lambda.parts(), p);
}

}  // namespace picketlab
