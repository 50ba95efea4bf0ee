#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scd/catalog.hpp"
#include "scd/constructions.hpp"
#include "scd/core.hpp"
#include "scd/direct.hpp"
#include "scd/families.hpp"
#include "scd/search.hpp"
#include "scd/verify.hpp"

using namespace scd;

TEST_CASE("verify_schgdd accepts the odd-t triple design and reports deletions") {
  auto d = direct::schgdd_3_1t(3);
  CHECK(verify_schgdd(d).pass);

  auto broken = d;
  broken.base_blocks.pop_back();
  auto rep = verify_schgdd(broken);
  CHECK_FALSE(rep.pass);
  int missing = 0;
  for (const auto& v : rep.violations)
    if (v.category.find("missing") != std::string::npos) ++missing;
  CHECK(missing == 6);  // the deleted block carried 6 ordered cross differences
}

TEST_CASE("verify_schgdd accepts the expanded orbit designs") {
  CHECK(verify_schgdd(direct::schgdd_6_3_3()).pass);
  CHECK(verify_schgdd(direct::schgdd_small_2cubed(10)).pass);
}

TEST_CASE("verify_chdm on the (3,t;1) columns (0,i,2i)") {
  Chdm c;
  c.k = 3;
  c.w = 1;
  c.t = 7;
  c.rows.assign(3, {});
  for (int i = 1; i < 7; ++i) {
    c.rows[0].push_back(0);
    c.rows[1].push_back(i);
    c.rows[2].push_back(mod(2 * i, 7));
  }
  CHECK(verify_chdm(c).pass);

  c.rows[1][0] = 2;  // duplicates a difference
  CHECK_FALSE(verify_chdm(c).pass);
}

TEST_CASE("verify_cdm accepts (0,j,2j) mod 5 and rejects it mod 4") {
  CHECK(verify_cdm(direct::cdm_odd(5)).pass);

  Cdm bad;
  bad.k = 3;
  bad.m = 4;
  bad.rows.assign(3, {});
  for (int j = 0; j < 4; ++j) {
    bad.rows[0].push_back(0);
    bad.rows[1].push_back(j);
    bad.rows[2].push_back(mod(2 * j, 4));
  }
  CHECK_FALSE(verify_cdm(bad).pass);
}

TEST_CASE("verify_difference_family on catalog tables") {
  CHECK(verify_difference_family(catalog::family("A:v=83")).pass);
  CHECK(verify_difference_family(catalog::family("B:t=6")).pass);
  auto f = catalog::family("Ex2.11");
  CHECK(f.h == 4);
  CHECK(verify_difference_family(f).pass);
}

TEST_CASE("single-element perturbation yields at least two violations") {
  auto f = catalog::family("A:v=83");
  f.blocks[0][1] = mod(f.blocks[0][1] + 1, f.modulus());
  auto rep = verify_difference_family(f);
  CHECK_FALSE(rep.pass);
  CHECK(rep.violations.size() >= 2);
}

TEST_CASE("verify_h_perfect monotonicity and shape gate") {
  std::map<int, Mgdd> inners;
  for (int k : {3, 5}) inners[k] = search::find_mgdd(k, 3);
  auto perfect = cons::c37_perfect_from_pdf(fam::build_pdf_4t(6), inners);
  CHECK(verify_h_perfect(perfect, 1).pass);
  CHECK(verify_h_perfect(perfect, 4).pass);  // allowed residue set only grows
  CHECK_THROWS_WITH_AS(verify_h_perfect(perfect, 3),
                       doctest::Contains("BadShape"), Error);
}

TEST_CASE("a cyclic design need not be perfect") {
  // The extended-Skolem route for (3,2^4) verifies but fails ele containment.
  auto c = direct::chdm_3_2t(4);
  auto d = chdm_to_schgdd(c);
  CHECK(verify_schgdd(d).pass);
  CHECK_FALSE(verify_h_perfect(d, 1).pass);
}

TEST_CASE("auxiliary verifiers") {
  CHECK(verify_mgdd(search::find_mgdd(3, 3)).pass);
  CHECK(verify_scgdd(search::find_scgdd(3, 2, 4)).pass);
  CHECK(verify_pbd(search::find_pbd(7, {3})).pass);

  Pbd bad;
  bad.v = 4;
  bad.blocks = {{0, 1, 2}};
  CHECK_FALSE(verify_pbd(bad).pass);

  // The 256/32 family doubles as a strictly cyclic {3,5}-GDD of type 32^8.
  CHECK(verify_difference_family(catalog::family("Ex:cdf-256-32")).pass);
}

TEST_CASE("report serialization is stable") {
  auto rep = verify_schgdd(direct::schgdd_3_1t(5));
  CHECK(rep.pass);
  auto j = rep.to_json();
  CHECK(j.at("pass") == true);
  CHECK(j.at("violations").is_array());
}
