#pragma once

#include <vector>

#include "picketlab/partition.hpp"
#include "picketlab/ring.hpp"

namespace picketlab {

// A finite-length module over Z/p^N given by its type: M(lambda) = ⊕ Z/p^{lambda_i}.
struct FLModule {
  std::int64_t p = 2;
  Partition type;
  long long length() const { return type.weight(); }
  int loewy_length() const { return type.part(0); }
};

struct QuotientType {
  // Type of the quotient (ambient modulo the span of the relation columns).
  Partition type;
  // Surjection onto standard coordinates of the quotient: row u maps ambient
  // coordinates to Z/p^{type[u]} (entries stored mod p^cap).
  MatZ proj;
};

// Ambient group ⊕_i Z/p^{ambient[i]} modulo the columns of `relations`.
// ambient entries need not be sorted; relation entries are read mod p^cap
// with cap = max(ambient).
QuotientType type_of_quotient(const std::vector<int>& ambient,
                              const MatZ& relations, std::int64_t p);
QuotientType type_of_quotient(const Partition& ambient, const MatZ& relations,
                              std::int64_t p);

// Length of the subgroup generated by the columns of `gens` inside ⊕ Z/p^{ambient[i]}.
long long subgroup_length(const std::vector<int>& ambient, const MatZ& gens,
                          std::int64_t p);

// len Hom_R(M(x), P^m) = sum_i min(x_i, m).
long long hom_length(const Partition& x, int m);

// hom_length(x, m) - hom_length(x, m-1); equals transpose(x)_m.
long long row_via_homs(const Partition& x, int m);

// Duality convention: M(lambda)* is identified with M(lambda) via the perfect
// pairing <e_i, e_j> = delta_ij * p^{cap - lambda_i} into Z/p^cap, cap = lambda_1.
// Returns a module of the same (self-dual) type.
FLModule dual_coordinates(const FLModule& m);

// Generators of ann(span of gens) in M(lambda)* under the pairing above.
MatZ annihilator(const Partition& lambda, const MatZ& gens, std::int64_t p);

// Solution subgroup of ⊕_s Z/p^{var_exp[s]} for the congruence system
//   sum_s A(u, s) x_s == 0  (mod p^{mod_exp[u]})   for every row u.
// Columns of the result generate the full solution set.
MatZ solve_congruences(const MatZ& A, const std::vector<int>& mod_exp,
                       const std::vector<int>& var_exp, std::int64_t p);

}  // namespace picketlab
