#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "scd/core.hpp"
#include "scd/direct.hpp"
#include "scd/search.hpp"
#include "scd/verify.hpp"

using namespace scd;

namespace {

// The (3,1^t) design with base blocks {(0,0),(1,x),(2,2x)}, x in [1,t-1].
SchgddDesign triple_design(int t) { return direct::schgdd_3_1t(t); }

}  // namespace

TEST_CASE("mod reduces into [0,m)") {
  CHECK(mod(7, 5) == 2);
  CHECK(mod(-1, 5) == 4);
  CHECK(mod(0, 9) == 0);
  CHECK(mod(-18, 9) == 0);
}

TEST_CASE("delta_pair_multiset on the odd-t triple design") {
  auto d = triple_design(3);
  CHECK(delta_pair_multiset(d, 0, 1) == std::vector<int>({1, 2}));
  CHECK(delta_pair_multiset(d, 0, 0).empty());
  CHECK(delta_pair_multiset(d, 2, 2).empty());
}

TEST_CASE("delta_pair_multiset of the (6,3^3) table design") {
  auto d = direct::schgdd_6_3_3();
  auto got = delta_pair_multiset(d, 0, 1);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<int>({1, 2, 4, 5, 7, 8}));
}

TEST_CASE("develop emits mt translates per base block") {
  auto d = triple_design(3);
  CHECK(develop(d).size() == 6);  // 2 base blocks x 3 translates

  auto d5 = triple_design(5);
  auto full = develop(d5);
  CHECK(full.size() == 20);
  // Brute-force: every cross-group pair covered exactly once.
  std::map<std::pair<Point, Point>, int> cover;
  for (const auto& b : full)
    for (const auto& p : b.points)
      for (const auto& q : b.points)
        if (p.group < q.group) ++cover[{p, q}];
  for (const auto& [pq, c] : cover) CHECK(c == 1);
  CHECK(cover.size() == 3 * 5 * 5);  // 3 group pairs x 5 x 5 residues
}

TEST_CASE("develop count for n=4, m=1, t=3") {
  auto d = search::find_schgdd(4, 1, 3);
  CHECK(d.base_blocks.size() == 4);
  CHECK(develop(d).size() == 12);
}

TEST_CASE("normalize_block shifts the minimum residue to 0") {
  BaseBlock b({{0, 3}, {1, 5}, {2, 8}});
  auto nb = normalize_block(b, 9);
  CHECK(nb.points == std::vector<Point>({{0, 0}, {1, 2}, {2, 5}}));

  BaseBlock c({{0, 0}, {1, 2}, {2, 5}});
  CHECK(normalize_block(c, 9).points == c.points);

  BaseBlock e({{0, 7}, {1, 1}, {2, 4}});
  CHECK(normalize_block(e, 8).points ==
        std::vector<Point>({{0, 6}, {1, 0}, {2, 3}}));
}

TEST_CASE("expected_base_block_count formula and divisibility gate") {
  CHECK(expected_base_block_count(3, 1, 5) == 4);
  CHECK(expected_base_block_count(6, 1, 3) == 10);
  CHECK(expected_base_block_count(4, 1, 4) == 6);
  CHECK_THROWS_WITH_AS(expected_base_block_count(5, 1, 3),
                       doctest::Contains("NotDivisible"), Error);
}

TEST_CASE("chdm/schgdd conversion round trip") {
  auto d = triple_design(5);
  auto c = schgdd_to_chdm(d);
  CHECK(c.k == 3);
  CHECK(c.w == 1);
  CHECK(c.t == 5);
  CHECK(c.cols() == 4);
  CHECK(verify_chdm(c).pass);

  auto back = chdm_to_schgdd(c);
  CHECK(verify_schgdd(back).pass);
  back.canonicalize();
  auto dd = d;
  dd.canonicalize();
  CHECK(back.base_blocks == dd.base_blocks);
}

TEST_CASE("schgdd_to_chdm rejects n != k") {
  auto d = direct::schgdd_6_3_3();
  CHECK_THROWS_WITH_AS(schgdd_to_chdm(d), doctest::Contains("ShapeMismatch"),
                       Error);
}

TEST_CASE("json round trips carry the kind tag") {
  auto d = triple_design(5);
  json jd = to_json(d);
  CHECK(jd.at("kind") == "schgdd");
  auto d2 = schgdd_from_json(jd);
  d2.canonicalize();
  d.canonicalize();
  CHECK(d2.base_blocks == d.base_blocks);
  CHECK(d2.n == d.n);
  CHECK(d2.m == d.m);
  CHECK(d2.t == d.t);

  auto c = schgdd_to_chdm(triple_design(5));
  json jc = to_json(c);
  CHECK(jc.at("kind") == "chdm");
  auto c2 = chdm_from_json(jc);
  CHECK(c2.rows == c.rows);

  DifferenceFamily f;
  f.g = 4;
  f.t = 6;
  f.h = 1;
  f.flavor = DfFlavor::Pdf;
  f.blocks = {{0, 1, 4, 9, 11}};
  json jf = to_json(f);
  CHECK(jf.at("kind") == "df");
  auto f2 = df_from_json(jf);
  CHECK(f2.blocks == f.blocks);
  CHECK(f2.flavor == DfFlavor::Pdf);
}
