#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "picketlab/lr_tableau.hpp"

using namespace picketlab;

namespace {

std::vector<Partition> chain_of(std::initializer_list<std::vector<int>> parts) {
  std::vector<Partition> out;
  for (const auto& p : parts) out.push_back(Partition(p));
  return out;
}

std::vector<Partition> partitions_up_to(int w) {
  std::vector<Partition> out;
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    out.push_back(Partition(acc));
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      acc.push_back(v);
      rec(remaining - v, v);
      acc.pop_back();
    }
  };
  (void)w;
  rec(w, w);
  // rec pushes duplicates of prefixes; dedupe.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("validate accepts the worked-example chain") {
  const LRTableau t =
      validate(chain_of({{3, 1}, {3, 2, 1}, {4, 3, 1}, {5, 3, 1}}));
  CHECK(t.alpha() == Partition({3, 2}));
  CHECK(t.beta() == Partition({5, 3, 1}));
  CHECK(t.gamma0() == Partition({3, 1}));
  CHECK(t.s() == 3);
}

TEST_CASE("validate rejects with first failing position") {
  CHECK_THROWS_AS(validate(chain_of({{2}, {1}})), TableauError);

  try {
    validate(chain_of({{}, {1}, {1, 1}}));
    FAIL("expected a lattice violation");
  } catch (const TableauError& e) {
    CHECK(e.kind() == TableauError::Kind::LatticeViolation);
    CHECK(e.level() == 2);
    CHECK(e.index() == 2);
  }

  try {
    validate(chain_of({{1}, {3}}));
    FAIL("expected a strip violation");
  } catch (const TableauError& e) {
    CHECK(e.kind() == TableauError::Kind::NotHorizontalStrip);
  }

  CHECK_THROWS_AS(validate({}), TableauError);
}

TEST_CASE("picket chains are valid single columns") {
  for (int m = 1; m <= 6; ++m) {
    for (int l = 0; l <= m; ++l) {
      std::vector<Partition> chain;
      for (int j = m - l; j <= m; ++j)
        chain.push_back(j == 0 ? Partition{} : Partition({j}));
      const LRTableau t = validate(chain);
      CHECK(t.beta() == Partition({m}));
      CHECK(t.alpha() == (l == 0 ? Partition{} : Partition({l})));
      for (int j = 1; j <= l; ++j) CHECK(count_boxes(t, j, m - l + j) == 1);
    }
  }
}

TEST_CASE("count_boxes on the worked example") {
  const LRTableau t =
      validate(chain_of({{3, 1}, {3, 2, 1}, {4, 3, 1}, {5, 3, 1}}));
  CHECK(count_boxes(t, 1, 1) == 1);
  CHECK(count_boxes(t, 1, 2) == 1);
  CHECK(count_boxes(t, 2, 3) == 1);
  CHECK(count_boxes(t, 2, 4) == 1);
  CHECK(count_boxes(t, 3, 5) == 1);
  long long total = 0;
  for (int l = 1; l <= t.s(); ++l)
    for (int m = 1; m <= 9; ++m) total += count_boxes(t, l, m);
  CHECK(total == t.alpha().weight());
  CHECK(count_boxes(t, 2, 9) == 0);
  CHECK_THROWS_AS(count_boxes(t, 0, 1), IndexOutOfRange);
}

TEST_CASE("reduce gives the skew of one step") {
  const LRTableau t = validate(chain_of({{2}, {3}, {4}}));
  const SkewStrip s = reduce(t, 1);
  CHECK(s.outer == Partition({3}));
  CHECK(s.inner == Partition({2}));
}

TEST_CASE("enumerate_tableaux counts") {
  CHECK(lr_coefficient(Partition({1}), Partition({2}), Partition({1})) == 1);
  CHECK(lr_coefficient(Partition({2, 1}), Partition({3, 2, 1}), Partition({2, 1})) == 2);
  CHECK(lr_coefficient(Partition({3}), Partition({5, 1}), Partition({3})) == 1);
  // Weight mismatch: no tableaux.
  CHECK(lr_coefficient(Partition({2}), Partition({2}), Partition({1})) == 0);

  // The unique filling for the kernel object's type.
  const auto all =
      enumerate_tableaux(Partition({3}), Partition({5, 1}), Partition({3}));
  REQUIRE(all.size() == 1);
  CHECK(all[0].chain() == chain_of({{3}, {3, 1}, {4, 1}, {5, 1}}));
}

TEST_CASE("enumeration agrees with the blind filler and transposition symmetry") {
  const auto small = partitions_up_to(6);
  for (const Partition& beta : partitions_up_to(6)) {
    if (beta.weight() < 1) continue;
    for (const Partition& gamma : small) {
      if (!contains(beta, gamma)) continue;
      for (const Partition& alpha : small) {
        if (alpha.weight() + gamma.weight() != beta.weight()) continue;
        const long long ours = lr_coefficient(alpha, beta, gamma);
        CHECK(ours == oracle::filler_count(alpha, beta, gamma));
        // c^beta_{alpha gamma} is symmetric in alpha <-> gamma.
        CHECK(ours == lr_coefficient(gamma, beta, alpha));
      }
    }
  }
}
