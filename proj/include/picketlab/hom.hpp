#pragma once

#include <optional>
#include <vector>

#include "picketlab/embedding.hpp"

namespace picketlab {

// A finite abelian group of morphisms with an explicit generating set.
// A morphism M -> N is an ambient matrix f (N rows x M rows) with
// f * gens(M) contained in the submodule of N.
struct HomSpace {
  std::vector<int> target_orders;  // exponent of the order of each target coordinate
  long long length = 0;            // log_p of the group order
  std::vector<MatZ> gens;
};

// Hom_S(M, P_l^m) = Hom_R(B/p^l A, P^m); generators are the standard cyclic
// generators pulled back through the quotient map (1 x |beta| rows mod p^m).
HomSpace hom_to_picket(const Embedding& M, int l, int m);

// Hom_S(P_q^m, M): columns b with p^m b = 0 and p^{m-q} b in A.
HomSpace hom_from_picket(std::int64_t p, int q, int m, const Embedding& M);

// Hom_S(M, N) for arbitrary embeddings, via one congruence solve.
HomSpace hom_space(const Embedding& M, const Embedding& N);

struct QuotientReport {
  int l = 0;  // l for the g-side, m - q for the h-side
  int m = 1;
  long long dim = 0;
  // Route values; -1 when a route was not requested.
  long long formula = -1;
  long long subfactor = -1;
  long long oracle = -1;
};

struct RouteSet {
  bool formula = true;
  bool subfactor = true;
  bool oracle = true;
};

// dim_k Hom_S(M, P_l^m) / Im Hom_S(M, g_l^m), by up to three routes which
// must agree (RouteDisagreement otherwise).  1 <= l <= m.
QuotientReport quotient_dim_to_picket(const Embedding& M, int l, int m,
                                      RouteSet routes = {});

// dim_k Hom_S(P_q^m, M) / Im Hom_S(h_q^m, M); the formula route reads boxes
// of the LR-tableau of dual(M) at (m - q, m) and requires q < m.
QuotientReport quotient_dim_from_picket(const Embedding& M, int q, int m,
                                        RouteSet routes = {});

struct PairingReport {
  bool picket_dim_ok = false;  // the one-dimensionality statement (part 1)
  long long quotient_dim = 0;
  long long cosets_checked = 0;
  long long failures = 0;  // nonzero cosets with no pairing witness
  bool vacuous = false;
  bool nondegenerate() const { return picket_dim_ok && failures == 0; }
};

// Caps the coset sweep at `max_cosets` representative combinations; beyond
// that the sweep falls back to seeded sampling of the same size.
struct PairingOptions {
  long long max_cosets = 1024;
  std::uint64_t sample_seed = 0;
};

// Left non-degeneracy: every nonzero coset of
// Hom(M,P_l^m)/Im Hom(M,g_l^m) composes nontrivially with some C_l^m -> M.
PairingReport pairing_left(int n, int l, int m, const Embedding& M,
                           PairingOptions opts = {});

// Dual statement through A_q^m and h_q^m.
PairingReport pairing_right(int n, int q, int m, const Embedding& M,
                            PairingOptions opts = {});

}  // namespace picketlab
