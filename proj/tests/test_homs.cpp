#include <doctest.h>

#include "oracle.hpp"
#include "picketlab/hom.hpp"
#include "picketlab/io.hpp"
#include "picketlab/random.hpp"
#include "picketlab/verify.hpp"

using namespace picketlab;

namespace {

Embedding worked_example() {
  return read_embedding(std::string(PICKETLAB_TEST_DATA) +
                        "/worked_example.json");
}

}  // namespace

TEST_CASE("hom_to_picket lengths") {
  CHECK(hom_to_picket(picket_embedding(2, 1, 2), 1, 2).length == 2);
  CHECK(hom_to_picket(worked_example(), 2, 4).length == 8);
  CHECK(hom_to_picket(worked_example(), 0, 0).length == 0);
  CHECK_THROWS_AS(hom_to_picket(worked_example(), 3, 0), IndexOutOfRange);
}

TEST_CASE("hom_from_picket lengths") {
  const Embedding p12 = picket_embedding(2, 1, 2);
  CHECK(hom_from_picket(2, 1, 2, p12).length == 2);

  const Embedding M = worked_example();
  for (int m = 1; m <= 4; ++m)
    CHECK(hom_from_picket(2, 0, m, M).length == hom_length(M.beta, m));

  // q = m: the image of the generator must already lie in the submodule.
  CHECK(hom_from_picket(2, 5, 5, M).length == alpha_of(M).weight());
}

TEST_CASE("hom generators satisfy the morphism constraints (brute force)") {
  // Tiny instances where every candidate ambient matrix can be enumerated.
  for (std::int64_t p : {2, 3}) {
    SplitMix64 rng(p);
    const Partition beta({2, 1});
    for (int trial = 0; trial < 8; ++trial) {
      const Embedding M = random_embedding(p, beta, 1, rng.next());
      const Embedding N = random_embedding(p, beta, 1, rng.next());
      const HomSpace hs = hom_space(M, N);
      const auto sub_n = oracle::closure(N.beta.parts(), N.gens, p);

      auto is_morphism = [&](const MatZ& f) {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            if (oracle::ipow(p, M.beta[j]) * f(i, j) %
                    oracle::ipow(p, N.beta[i]) !=
                0)
              return false;
        for (int c = 0; c < M.num_gens(); ++c) {
          oracle::Elt img(2);
          for (int i = 0; i < 2; ++i) {
            __int128 acc = 0;
            for (int j = 0; j < 2; ++j)
              acc += static_cast<__int128>(f(i, j)) * M.gens(j, c);
            img[static_cast<std::size_t>(i)] =
                static_cast<std::int64_t>(acc % oracle::ipow(p, N.beta[i]));
          }
          if (!sub_n.count(img)) return false;
        }
        return true;
      };

      for (const MatZ& f : hs.gens) CHECK(is_morphism(f));

      long long brute = 0;
      MatZ f(2, 2);
      const std::int64_t m0 = oracle::ipow(p, N.beta[0]);
      const std::int64_t m1 = oracle::ipow(p, N.beta[1]);
      for (f(0, 0) = 0; f(0, 0) < m0; ++f(0, 0))
        for (f(0, 1) = 0; f(0, 1) < m0; ++f(0, 1))
          for (f(1, 0) = 0; f(1, 0) < m1; ++f(1, 0))
            for (f(1, 1) = 0; f(1, 1) < m1; ++f(1, 1))
              if (is_morphism(f)) ++brute;
      CHECK(brute == oracle::ipow(p, static_cast<int>(hs.length)));
    }
  }
}

TEST_CASE("three routes on the worked example") {
  const Embedding M = worked_example();
  const std::set<std::pair<int, int>> paths = {
      {1, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}};
  for (int m = 1; m <= 5; ++m)
    for (int l = 1; l <= m; ++l) {
      const QuotientReport rep = quotient_dim_to_picket(M, l, m);
      CHECK(rep.dim == (paths.count({l, m}) ? 1 : 0));
    }
  CHECK(quotient_dim_to_picket(construct_c(2, 5, 2, 4), 2, 4).dim == 1);
}

TEST_CASE("box totals per label") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::int64_t p = seed % 2 ? 2 : 3;
    const Embedding M = random_embedding(p, Partition({3, 2, 1}), 2, seed);
    const Partition alpha_t = transpose(alpha_of(M));
    for (int l = 1; l <= alpha_of(M).part(0); ++l) {
      long long total = 0;
      for (int m = l; m <= M.beta.part(0) + 1; ++m)
        total += quotient_dim_to_picket(M, l, m).dim;
      CHECK(total == alpha_t.part(l - 1));
    }
  }
}

TEST_CASE("image of the sink map equals all proper factorizations") {
  // Maps factoring through any proper picket inclusion P_a^b -> P_l^m
  // (a <= l, b <= m, (a,b) != (l,m), m - a <= b) generate the same image.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::int64_t p = seed % 2 ? 2 : 3;
    const Embedding M = random_embedding(p, Partition({3, 1}), 1, seed);
    for (int m = 1; m <= 4; ++m)
      for (int l = 1; l <= m; ++l) {
        const std::int64_t pm = oracle::ipow(p, m);
        const std::vector<int> orders(static_cast<std::size_t>(M.beta.size()), m);

        auto pack = [&](const std::vector<MatZ>& rows) {
          MatZ out(M.beta.size(), static_cast<int>(rows.size()));
          for (std::size_t c = 0; c < rows.size(); ++c)
            out.col(static_cast<int>(c)) = rows[c].row(0).transpose();
          return out;
        };

        const PicketMorphism g = make_g(p, l, m);
        std::vector<MatZ> via_g;
        for (std::size_t c = 0; c < g.source.size(); ++c)
          for (const MatZ& r : hom_to_picket(M, g.source[c].l, g.source[c].m).gens)
            via_g.push_back((g.scalars[c] * r).unaryExpr(
                [pm](std::int64_t v) { return v % pm; }));

        std::vector<MatZ> via_all;
        for (int b = 1; b <= m; ++b)
          for (int a = 0; a <= std::min(l, b); ++a) {
            if (std::make_pair(a, b) == std::make_pair(l, m)) continue;
            if (m - a > b) continue;
            // P_a^b -> P_l^m is multiplication by p^{m-b}.
            const std::int64_t scale = oracle::ipow(p, m - b);
            for (const MatZ& r : hom_to_picket(M, a, b).gens)
              via_all.push_back((scale * r).unaryExpr(
                  [pm](std::int64_t v) { return v % pm; }));
          }

        CHECK(subgroup_length(orders, pack(via_g), p) ==
              subgroup_length(orders, pack(via_all), p));
        MatZ joint(M.beta.size(),
                   static_cast<int>(via_g.size() + via_all.size()));
        joint << pack(via_g), pack(via_all);
        CHECK(subgroup_length(orders, joint, p) ==
              subgroup_length(orders, pack(via_g), p));
      }
  }
}

TEST_CASE("theorem-3 style counts via the dual tableau") {
  const Embedding M = worked_example();
  const LRTableau dual_t = lr_tableau_of(dual(M));
  for (int m = 1; m <= 5; ++m)
    for (int q = 0; q < m; ++q) {
      const QuotientReport rep = quotient_dim_from_picket(M, q, m);
      const long long boxes =
          m - q <= dual_t.s() ? count_boxes(dual_t, m - q, m) : 0;
      CHECK(rep.dim == boxes);
    }
  // q = m is oracle-only but must not throw.
  CHECK(quotient_dim_from_picket(M, 3, 3).dim >= 0);
}

TEST_CASE("pairings") {
  const Embedding M = worked_example();
  CHECK(pairing_left(5, 2, 4, M).nondegenerate());
  CHECK(pairing_right(5, 2, 4, M).nondegenerate());

  // The kernel object pairs with itself through the identity.
  const Embedding C = construct_c(2, 4, 2, 3);
  CHECK(pairing_left(4, 2, 3, C).nondegenerate());

  // Zero quotient is vacuously non-degenerate.
  const PairingReport vac = pairing_left(5, 1, 5, M);
  CHECK(vac.vacuous);
  CHECK(vac.nondegenerate());

  CHECK_THROWS_AS(pairing_left(2, 1, 2, M), NotInSn);
}

TEST_CASE("verification sweeps are deterministic across thread counts") {
  const Embedding M = worked_example();
  const auto rows1 = verify_theorem1(M, 5, 1);
  const auto rows4 = verify_theorem1(M, 5, 4);
  REQUIRE(rows1.size() == rows4.size());
  for (std::size_t i = 0; i < rows1.size(); ++i) {
    CHECK(rows1[i].l == rows4[i].l);
    CHECK(rows1[i].m == rows4[i].m);
    CHECK(rows1[i].count_hom == rows4[i].count_hom);
    CHECK(rows1[i].agree());
  }
  for (const VerifyRow& r : verify_theorem3(M, 5, 2)) CHECK(r.agree());
}
