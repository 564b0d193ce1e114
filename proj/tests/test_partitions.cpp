#include <doctest.h>

#include <functional>

#include "picketlab/partition.hpp"

using namespace picketlab;

namespace {

// All partitions of weight exactly w.
std::vector<Partition> partitions_of(int w) {
  std::vector<Partition> out;
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition(acc));
      return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      acc.push_back(v);
      rec(remaining - v, v);
      acc.pop_back();
    }
  };
  rec(w, w);
  return out;
}

}  // namespace

TEST_CASE("construction invariants") {
  CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
  CHECK_THROWS_AS(Partition({2, 3}), InvalidPartition);
  CHECK_THROWS_AS(Partition({1, -1}), InvalidPartition);
  CHECK(Partition{}.empty());
  CHECK(Partition({5, 3, 1}).part(7) == 0);
}

TEST_CASE("transpose") {
  CHECK(transpose(Partition({5, 3, 1})) == Partition({3, 2, 2, 1, 1}));
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(transpose(Partition({2, 2})) == Partition({2, 2}));
}

TEST_CASE("transpose involution and weight, exhaustive to 12") {
  for (int w = 0; w <= 12; ++w) {
    for (const Partition& p : partitions_of(w)) {
      CHECK(transpose(transpose(p)) == p);
      CHECK(transpose(p).weight() == p.weight());
    }
  }
}

TEST_CASE("containment") {
  CHECK(contains(Partition({3, 2}), Partition({2, 2})));
  CHECK_FALSE(contains(Partition({3, 1}), Partition({3, 2})));
  CHECK(contains(Partition({3}), Partition{}));
  for (const Partition& a : partitions_of(5))
    for (const Partition& b : partitions_of(3))
      CHECK(contains(a, b) == contains(transpose(a), transpose(b)));
}

TEST_CASE("horizontal strips") {
  const StripCheck ok = is_horizontal_strip({Partition({3, 2}), Partition({2, 2})});
  CHECK(ok.horizontal);
  CHECK(ok.length == 1);

  const StripCheck bad = is_horizontal_strip({Partition({4, 2}), Partition({2, 2})});
  CHECK_FALSE(bad.horizontal);
  CHECK(bad.violation_index == 0);

  const StripCheck one =
      is_horizontal_strip({Partition({5, 3, 1}), Partition({4, 3, 1})});
  CHECK(one.horizontal);
  CHECK(one.length == 1);

  CHECK_THROWS(SkewStrip(Partition({2}), Partition({3})));
}

TEST_CASE("text round trip") {
  CHECK(parse_partition("5,3,1") == Partition({5, 3, 1}));
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("0") == Partition{});
  CHECK(format_partition(Partition({5, 3, 1})) == "5,3,1");
  CHECK_THROWS(parse_partition("3,5"));
  CHECK_THROWS(parse_partition("a,b"));
}
