#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scd/catalog.hpp"
#include "scd/constructions.hpp"
#include "scd/direct.hpp"
#include "scd/engine.hpp"
#include "scd/families.hpp"
#include "scd/search.hpp"
#include "scd/verify.hpp"

using namespace scd;
using namespace scd::cons;

namespace {

std::map<int, Mgdd> mgdds_for(const DifferenceFamily& f, int n) {
  std::map<int, Mgdd> out;
  for (const auto& b : f.blocks)
    if (!out.count(static_cast<int>(b.size())))
      out[static_cast<int>(b.size())] =
          search::find_mgdd(static_cast<int>(b.size()), n);
  return out;
}

}  // namespace

TEST_CASE("c31_fill composes an outer design with a subgroup inner") {
  auto outer = engine::build_schgdd(3, 3, 3);  // type (3,3^3), g=1, w=3
  auto inner = direct::schgdd_3_1t(3);         // type (3,1^3)
  auto out = c31_fill(outer, inner);
  CHECK(out.n == 3);
  CHECK(out.m == 1);
  CHECK(out.t == 9);
  CHECK(verify_schgdd(out).pass);
  CHECK(static_cast<long long>(out.base_blocks.size()) ==
        expected_base_block_count(3, 1, 9));
}

TEST_CASE("c32_inflate builds (4,2^t) from a 3-SCGDD of type 2^4") {
  auto outer = search::find_scgdd(3, 2, 4);
  std::map<int, SchgddDesign> inners{{3, direct::schgdd_3_1t(3)}};
  auto out = c32_inflate(outer, inners);
  CHECK(out.n == 4);
  CHECK(out.m == 2);
  CHECK(out.t == 3);
  CHECK(verify_schgdd(out).pass);

  CHECK_THROWS_WITH_AS(c32_inflate(outer, {}),
                       doctest::Contains("MissingInner"), Error);
}

TEST_CASE("c33_from_strict_gdd places mgdds on a CDF") {
  auto gdd = catalog::family("F:t=9");  // (36,4,{3,5},1)-CDF
  auto out = c33_from_strict_gdd(gdd, mgdds_for(gdd, 3));
  CHECK(out.n == 3);
  CHECK(out.m == 4);
  CHECK(out.t == 9);
  CHECK(verify_schgdd(out).pass);
}

TEST_CASE("c34_cdm_product scales the hole parameter") {
  auto base = direct::schgdd_3_1t(5);
  auto out = c34_cdm_product(base, direct::cdm_odd(3));
  CHECK(out.m == 3);
  CHECK(out.t == 5);
  CHECK(verify_schgdd(out).pass);
  CHECK(static_cast<long long>(out.base_blocks.size()) ==
        expected_base_block_count(3, 3, 5));

  auto d413 = search::find_schgdd(4, 1, 3);
  auto big = c34_cdm_product(d413, direct::cdm_odd(5));
  CHECK(big.base_blocks.size() == 20);
  CHECK(verify_schgdd(big).pass);
}

TEST_CASE("c34 with the one-column identity CDM is the identity") {
  auto base = direct::schgdd_3_1t(5);
  Cdm id;
  id.k = 3;
  id.m = 1;
  id.rows = {{0}, {0}, {0}};
  auto out = c34_cdm_product(base, id);
  out.canonicalize();
  base.canonicalize();
  CHECK(out.base_blocks == base.base_blocks);
}

TEST_CASE("c35_chdm_weave composes coprime moduli") {
  auto base = direct::schgdd_3_1t(5);          // w=1, t=5
  auto hw = engine::build_schgdd(3, 2, 5);     // (3,2^5)
  auto chdm = direct::chdm_3_2t(4);            // (3,8;2): h=2, g=4
  auto out = c35_chdm_weave(base, hw, chdm);   // gcd(5,8)=1
  CHECK(out.m == 8);
  CHECK(out.t == 5);
  CHECK(verify_schgdd(out).pass);
}

TEST_CASE("c35 rejects non-coprime moduli") {
  auto base = direct::schgdd_3_1t(3);  // wt = 3
  auto hw = base;                      // h = 1 keeps shapes consistent
  Chdm c33m;  // (3,3;1): hg = 3, gcd(3,3) != 1
  c33m.k = 3;
  c33m.w = 1;
  c33m.t = 3;
  c33m.rows = {{0, 0}, {1, 2}, {2, 4}};
  for (auto& r : c33m.rows)
    for (auto& x : r) x = mod(x, 3);
  REQUIRE(verify_chdm(c33m).pass);
  CHECK_THROWS_WITH_AS(c35_chdm_weave(base, hw, c33m),
                       doctest::Contains("GcdViolation"), Error);
}

TEST_CASE("c37_perfect_from_pdf yields perfect designs") {
  auto f6 = fam::build_pdf_4t(6);
  auto perfect = c37_perfect_from_pdf(f6, mgdds_for(f6, 3));
  CHECK(perfect.m == 4);
  CHECK(perfect.t == 6);
  CHECK(verify_h_perfect(perfect, 1).pass);

  auto f2p = fam::build_2pdf_8t(8);
  auto hperf = c37_perfect_from_pdf(f2p, mgdds_for(f2p, 3));
  CHECK(hperf.m == 8);
  CHECK(hperf.t == 8);
  CHECK(verify_h_perfect(hperf, 2).pass);

  auto ex211 = catalog::family("Ex2.11");
  auto p4 = c37_perfect_from_pdf(ex211, mgdds_for(ex211, 3));
  CHECK(p4.m == 16);
  CHECK(p4.t == 6);
  CHECK(verify_h_perfect(p4, 4).pass);
}

TEST_CASE("c36_perfect_weave produces an hg-perfect composite") {
  auto f6 = fam::build_pdf_4t(6);
  auto perfect = c37_perfect_from_pdf(f6, mgdds_for(f6, 3));  // perfect (3,4^6)
  auto ex211 = catalog::family("Ex2.11");
  auto hperf = c37_perfect_from_pdf(ex211, mgdds_for(ex211, 3));  // 4-perf (3,16^6)
  auto chdm = direct::chdm_3_4t(4);  // (3,16;4): h=4, g=4
  auto out = c36_perfect_weave(perfect, hperf, chdm);
  CHECK(out.m == 64);
  CHECK(out.t == 6);
  CHECK(verify_h_perfect(out, 16).pass);
}
