#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "scd/core.hpp"
#include "scd/direct.hpp"
#include "scd/verify.hpp"

using namespace scd;
using namespace scd::direct;

TEST_CASE("schgdd_3_1t") {
  auto d3 = schgdd_3_1t(3);
  CHECK(d3.base_blocks.size() == 2);
  CHECK(verify_schgdd(d3).pass);

  auto d5 = schgdd_3_1t(5);
  CHECK(d5.base_blocks.size() == 4);
  CHECK(verify_schgdd(d5).pass);

  CHECK_THROWS_AS(schgdd_3_1t(4), Error);
}

TEST_CASE("cdm_odd") {
  CHECK(verify_cdm(cdm_odd(5)).pass);
  CHECK(verify_cdm(cdm_odd(9)).pass);
}

TEST_CASE("chdm_3_2t dispatch") {
  auto c4 = chdm_3_2t(4);  // extended-Skolem branch
  CHECK(c4.w == 2);
  CHECK(c4.t == 4);
  CHECK(c4.cols() == 6);
  CHECK(verify_chdm(c4).pass);

  auto c14 = chdm_3_2t(14);  // embedded matrix
  CHECK(c14.cols() == 26);
  CHECK(verify_chdm(c14).pass);

  auto c15 = chdm_3_2t(15);
  CHECK(verify_chdm(c15).pass);

  auto c7 = chdm_3_2t(7);  // doubled-family route
  CHECK(verify_chdm(c7).pass);

  CHECK_THROWS_AS(chdm_3_2t(3), Error);
}

TEST_CASE("chdm_3_4t and chdm_3_2xt") {
  auto c5 = chdm_3_4t(5);  // embedded 3x16 matrix
  CHECK(c5.w == 4);
  CHECK(c5.t == 5);
  CHECK(c5.cols() == 16);
  CHECK(verify_chdm(c5).pass);

  CHECK(verify_chdm(chdm_3_4t(7)).pass);

  auto x36 = chdm_3_2xt(3, 6);  // embedded 3x40 matrix
  CHECK(x36.w == 8);
  CHECK(x36.t == 6);
  CHECK(x36.cols() == 40);
  CHECK(verify_chdm(x36).pass);

  auto x58 = chdm_3_2xt(5, 8);  // 256/32 family route
  CHECK(x58.w == 32);
  CHECK(x58.t == 8);
  CHECK(verify_chdm(x58).pass);

  CHECK(verify_chdm(chdm_3_2xt(3, 5)).pass);
}

TEST_CASE("schgdd_6_3_3 expands to 30 verified base blocks") {
  auto d = schgdd_6_3_3();
  CHECK(d.base_blocks.size() == 30);
  CHECK(verify_schgdd(d).pass);
  auto got = delta_pair_multiset(d, 0, 5);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<int>({1, 2, 4, 5, 7, 8}));
}

TEST_CASE("weil_find_x matches the small-prime table") {
  const std::vector<std::pair<int, int>> table = {
      {5, 2},  {7, 5},   {11, 6}, {13, 5}, {17, 5}, {19, 2},
      {23, 10}, {29, 2}, {31, 11}, {37, 5}, {41, 6}, {43, 2}};
  for (auto [p, x] : table) {
    CAPTURE(p);
    CHECK(weil_find_x(p) == x);
  }
  int x47 = weil_find_x(47);
  CHECK(x47 >= 2);
  CHECK(x47 < 47);
  CHECK_THROWS_AS(weil_find_x(9), Error);
  CHECK_THROWS_AS(weil_find_x(3), Error);
}

TEST_CASE("schgdd_6_2p block counts and verification") {
  auto d3 = schgdd_6_2p(3);
  CHECK(d3.base_blocks.size() == 20);
  CHECK(verify_schgdd(d3).pass);

  auto d5 = schgdd_6_2p(5);
  CHECK(d5.base_blocks.size() == 40);
  CHECK(verify_schgdd(d5).pass);

  auto d7 = schgdd_6_2p(7);
  CHECK(d7.base_blocks.size() == 60);
  CHECK(verify_schgdd(d7).pass);
}

TEST_CASE("schgdd_small_2cubed expands the orbit tables") {
  const std::vector<std::pair<int, int>> cases = {
      {10, 60}, {15, 140}, {18, 204}, {27, 468}};
  for (auto [n, count] : cases) {
    CAPTURE(n);
    auto d = schgdd_small_2cubed(n);
    CHECK(static_cast<int>(d.base_blocks.size()) == count);
    CHECK(verify_schgdd(d).pass);
  }
  CHECK_THROWS_AS(schgdd_small_2cubed(11), Error);
}

TEST_CASE("prove_nonexistence_exhaustive small cases") {
  CHECK(prove_nonexistence_exhaustive(3, 2, 3) ==
        NonexistenceOutcome::Nonexistent);
  CHECK(prove_nonexistence_exhaustive(3, 1, 3) == NonexistenceOutcome::Found);
  CHECK(prove_nonexistence_exhaustive(3, 1, 4) ==
        NonexistenceOutcome::Nonexistent);
}
