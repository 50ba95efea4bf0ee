#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "scd/sequences.hpp"

using namespace scd;
using namespace scd::seq;

TEST_CASE("skolem_exists parity classes") {
  CHECK(skolem_exists(3, 4));
  CHECK_FALSE(skolem_exists(4, 2));
  CHECK(skolem_exists(4, 5));
  CHECK_THROWS_WITH_AS(skolem_exists(3, 0), doctest::Contains("OutOfRange"),
                       Error);
  CHECK_THROWS_WITH_AS(skolem_exists(3, 8), doctest::Contains("OutOfRange"),
                       Error);
}

TEST_CASE("find_extended_skolem returns verified sequences") {
  auto s = find_extended_skolem(3, 4);
  CHECK(s.values == std::vector<int>({2, 7, 6}));
  CHECK(verify_skolem(s));

  auto s2 = find_extended_skolem(4, 9);  // hole at 2v+1: plain Skolem order 4
  CHECK(verify_skolem(s2));

  CHECK_THROWS_AS(find_extended_skolem(1, 2), Error);  // predicate gate
}

TEST_CASE("langford_pairs_exists congruences and table ranges") {
  CHECK(langford_pairs_exists(38, 17, 12));
  CHECK(langford_pairs_exists(68, 33, 19));
  CHECK_FALSE(langford_pairs_exists(9, 3, 2));  // c parity mismatch
  CHECK(langford_pairs_exists(5, 3, 1));
}

TEST_CASE("find_langford_pairs is table-first") {
  auto p = find_langford_pairs(38, 17, 12);
  CHECK(p.pairs.size() == 38);
  CHECK(p.pairs.front() == std::pair<int, int>(13, 41));
  CHECK(verify_pairs(p));

  auto q = find_langford_pairs(70, 33, 20);
  CHECK(q.pairs.size() == 70);
  CHECK(q.pairs.front() == std::pair<int, int>(38, 81));
  CHECK(verify_pairs(q));
}

TEST_CASE("find_langford_pairs search fallback for small orders") {
  auto p = find_langford_pairs(5, 3, 1);
  CHECK(verify_pairs(p));
  CHECK(p.u == 5);
  CHECK(p.c == 1);
}

TEST_CASE("pair_cover tiles an interval with a consecutive difference run") {
  auto pc = pair_cover(1, 11, 1, 3, kDefaultBudget);
  REQUIRE(pc.has_value());
  std::vector<int> used, diffs;
  for (auto [x, y] : *pc) {
    used.push_back(x);
    used.push_back(y);
    diffs.push_back(y - x);
  }
  std::sort(used.begin(), used.end());
  CHECK(used == std::vector<int>({2, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
  std::sort(diffs.begin(), diffs.end());
  CHECK(diffs == std::vector<int>({3, 4, 5, 6, 7}));
}

TEST_CASE("find_triple_partition") {
  auto t0 = find_triple_partition(1, 1, std::nullopt);
  REQUIRE(t0.triples.size() == 1);
  CHECK(t0.triples[0] == std::array<int, 3>({1, 2, 3}));

  auto t1 = find_triple_partition(2, 3, std::nullopt);
  CHECK(t1.triples.size() == 3);
  CHECK(verify_triples(t1));

  auto t2 = find_triple_partition(3, 5, 12);
  CHECK(t2.triples.size() == 5);
  CHECK(verify_triples(t2));
  for (const auto& tr : t2.triples)
    for (int x : tr) CHECK(x != 12);
}

TEST_CASE("small cross-validation of the extended-Skolem predicate") {
  for (int v = 1; v <= 6; ++v)
    for (int d = 1; d <= 2 * v + 1; ++d) {
      bool pred = skolem_exists(v, d);
      bool found = true;
      try {
        auto s = find_extended_skolem(v, d);
        found = verify_skolem(s);
      } catch (const Error&) {
        found = false;
      }
      CAPTURE(v);
      CAPTURE(d);
      CHECK(pred == found);
    }
}
