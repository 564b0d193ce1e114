#pragma once

#include <map>
#include <utility>
#include <vector>

#include "picketlab/lr_tableau.hpp"
#include "picketlab/modules.hpp"

namespace picketlab {

// An object (A ⊆ B) of the category S: ambient type beta, submodule given by
// the columns of `gens` in ambient coordinates (entry i reduced mod p^{beta_i}).
struct Embedding {
  std::int64_t p = 2;
  Partition beta;
  MatZ gens;  // beta.size() x (number of generators)

  int ambient_rank() const { return beta.size(); }
  int num_gens() const { return static_cast<int>(gens.cols()); }
};

// P_l^m = ((p^{m-l}) ⊆ R/(p^m));  l = 0 yields the empty generator set.
struct Picket {
  int l = 0;
  int m = 1;
  auto operator<=>(const Picket&) const = default;
};

Embedding make_embedding(std::int64_t p, Partition beta, MatZ gens);
Embedding picket_embedding(std::int64_t p, int l, int m);

// gamma^l = type(B / p^l A) for l = 0..s; last entry equals beta.
std::vector<Partition> gamma_chain(const Embedding& M);

// Green's theorem: the chain of quotient types is an LR-tableau.
LRTableau lr_tableau_of(const Embedding& M);

Partition alpha_of(const Embedding& M);  // type(A)
Partition gamma_of(const Embedding& M);  // type(B/A)

// The reduced embedding (p^{l-1}A / p^l A ⊆ B / p^l A), an object of S_1,
// in standard coordinates of the quotient.  l >= 1; for l beyond the Loewy
// length of A the submodule is zero.
Embedding subfactor(const Embedding& M, int l);

// Krull-Remak-Schmidt decomposition of an S_1 object into pickets,
// as multiplicities keyed by (l, m).  Requires p·A = 0.
std::map<Picket, int> decompose_s1(const Embedding& M);

// (U ⊆ B*) with U = ann_{B*}(A); exchanges sub and quotient types.
Embedding dual(const Embedding& M);

// C_l^m in S(n): kernel object (incl, -can): P^{n+l-m} -> P^n ⊕ P^{l-1}
// for l < m; the picket P_n^n for l = m.
Embedding construct_c(std::int64_t p, int n, int l, int m);

// A_q^m in S(n): P_0^n for q = 0; dual(C_{m-q}^m) for q > 0.
Embedding construct_a(std::int64_t p, int n, int q, int m);

// A map between sums of pickets with one scalar ambient component per summand.
// kind 'g': source summands -> single target picket (the sink map for P_l^m).
// kind 'h': single source picket -> target summands (the dual source map).
struct PicketMorphism {
  char kind = 'g';
  int idx = 0;  // l for g, q for h
  int m = 1;
  std::vector<Picket> source;
  std::vector<Picket> target;
  // For g: scalar of the component source[i] -> target[0].
  // For h: scalar of the component source[0] -> target[i].
  std::vector<std::int64_t> scalars;
};

PicketMorphism make_g(std::int64_t p, int l, int m);
PicketMorphism make_h(std::int64_t p, int q, int m);

}  // namespace picketlab
