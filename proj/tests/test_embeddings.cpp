#include <doctest.h>

#include "oracle.hpp"
#include "picketlab/embedding.hpp"
#include "picketlab/random.hpp"

using namespace picketlab;

TEST_CASE("picket embeddings and their tableaux") {
  const Embedding p23 = picket_embedding(2, 2, 3);
  CHECK(p23.beta == Partition({3}));
  CHECK(p23.gens(0, 0) == 2);
  CHECK(alpha_of(p23) == Partition({2}));
  CHECK(gamma_of(p23) == Partition({1}));

  for (int m = 1; m <= 5; ++m) {
    for (int l = 0; l <= m; ++l) {
      const LRTableau t = lr_tableau_of(picket_embedding(3, l, m));
      CHECK(t.s() == l);
      CHECK(t.beta() == Partition({m}));
      CHECK(t.gamma0() == (l == m ? Partition{} : Partition({m - l})));
    }
  }
}

TEST_CASE("green's theorem on random embeddings") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const std::int64_t p = seed % 2 ? 2 : 3;
    const Embedding M = random_embedding(p, Partition({4, 2, 1}), 2, seed);
    const LRTableau t = lr_tableau_of(M);  // validate() throws on failure
    CHECK(t.beta() == M.beta);
    CHECK(t.alpha().weight() + t.gamma0().weight() == M.beta.weight());
  }
}

TEST_CASE("subfactor of a picket") {
  for (int m = 2; m <= 5; ++m)
    for (int l = 1; l <= m; ++l)
      for (int j = 1; j <= l; ++j) {
        const Embedding sf = subfactor(picket_embedding(2, l, m), j);
        CHECK(sf.beta == Partition({m - l + j}));
        const auto dec = decompose_s1(sf);
        REQUIRE(dec.size() == 1);
        CHECK(dec.begin()->first == Picket{1, m - l + j});
        CHECK(dec.begin()->second == 1);
      }
}

TEST_CASE("decompose_s1") {
  // beta = (3,2), submodule generated by (4, 0): quotient type (2,2), so the
  // summands are P_1^3 and P_0^2.
  MatZ g(2, 1);
  g << 4, 0;
  const auto dec = decompose_s1(make_embedding(2, Partition({3, 2}), g));
  REQUIRE(dec.size() == 2);
  CHECK(dec.at(Picket{1, 3}) == 1);
  CHECK(dec.at(Picket{0, 2}) == 1);

  // Generator (4, 2): the quotient has an element of order 8, type (3,1).
  MatZ g2(2, 1);
  g2 << 4, 2;
  const auto dec2 = decompose_s1(make_embedding(2, Partition({3, 2}), g2));
  REQUIRE(dec2.size() == 2);
  CHECK(dec2.at(Picket{0, 3}) == 1);
  CHECK(dec2.at(Picket{1, 2}) == 1);

  MatZ bad(2, 1);
  bad << 2, 2;
  CHECK_THROWS_AS(decompose_s1(make_embedding(2, Partition({3, 2}), bad)),
                  NotSemisimpleSubmodule);
}

TEST_CASE("duality on pickets and involution") {
  for (int m = 1; m <= 6; ++m)
    for (int l = 0; l <= m; ++l) {
      const Embedding d = dual(picket_embedding(2, l, m));
      CHECK(lr_tableau_of(d) == lr_tableau_of(picket_embedding(2, m - l, m)));
    }

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::int64_t p = seed % 2 ? 2 : 3;
    const Embedding M = random_embedding(p, Partition({3, 3, 1}), 2, seed);
    CHECK(lr_tableau_of(dual(dual(M))) == lr_tableau_of(M));
    CHECK(alpha_of(dual(M)) == gamma_of(M));
    CHECK(gamma_of(dual(M)) == alpha_of(M));
  }
}

TEST_CASE("kernel object construction") {
  const Embedding c = construct_c(2, 5, 2, 4);
  CHECK(c.beta == Partition({5, 1}));
  CHECK(c.gens.cols() == 1);
  CHECK(c.gens(0, 0) == 4);
  CHECK(c.gens(1, 0) == 1);
  CHECK(lr_tableau_of(c).chain() ==
        std::vector<Partition>{Partition({3}), Partition({3, 1}),
                               Partition({4, 1}), Partition({5, 1})});

  // l = m degenerates to the full picket.
  CHECK(lr_tableau_of(construct_c(2, 4, 4, 4)) ==
        lr_tableau_of(picket_embedding(2, 4, 4)));

  // Exactly one box l in row m, and alpha has l parts... the box-uniqueness
  // property used by the one-dimensionality statement.
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m)
      for (int l = 1; l <= m; ++l) {
        const LRTableau t = lr_tableau_of(construct_c(2, n, l, m));
        CHECK(count_boxes(t, l, m) == 1);
        for (int j = 1; j <= t.s(); ++j)
          if (j != l) CHECK(count_boxes(t, j, m) == 0);
      }
}

TEST_CASE("source object construction") {
  CHECK(lr_tableau_of(construct_a(2, 5, 0, 4)) ==
        lr_tableau_of(picket_embedding(2, 0, 5)));
  const Embedding a = construct_a(2, 5, 2, 4);
  CHECK(a.beta == Partition({5, 1}));
  CHECK(alpha_of(a) == Partition({3}));
}

TEST_CASE("sink and source maps") {
  const PicketMorphism g = make_g(2, 2, 4);
  CHECK(g.source == std::vector<Picket>{Picket{1, 4}, Picket{2, 3}});
  CHECK(g.target == std::vector<Picket>{Picket{2, 4}});
  CHECK(g.scalars == std::vector<std::int64_t>{1, 2});

  const PicketMorphism g_top = make_g(2, 4, 4);
  CHECK(g_top.source == std::vector<Picket>{Picket{3, 4}});
  CHECK(g_top.scalars == std::vector<std::int64_t>{1});

  const PicketMorphism g_bot = make_g(2, 0, 4);
  CHECK(g_bot.source == std::vector<Picket>{Picket{0, 3}});
  CHECK(g_bot.scalars == std::vector<std::int64_t>{2});

  const PicketMorphism h = make_h(2, 2, 4);
  CHECK(h.source == std::vector<Picket>{Picket{2, 4}});
  CHECK(h.target == std::vector<Picket>{Picket{1, 3}, Picket{3, 4}});

  const PicketMorphism h0 = make_h(2, 0, 4);
  CHECK(h0.target == std::vector<Picket>{Picket{1, 4}});

  const PicketMorphism htop = make_h(2, 4, 4);
  CHECK(htop.target == std::vector<Picket>{Picket{3, 3}});
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(picket_embedding(2, 3, 2), IndexOutOfRange);
  MatZ g(1, 1);
  g << 1;
  CHECK_THROWS(make_embedding(2, Partition({2, 1}), g));  // wrong row count
}
