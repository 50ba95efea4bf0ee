#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "scd/search.hpp"
#include "scd/verify.hpp"

using namespace scd;
using namespace scd::search;

TEST_CASE("ingredient_exists transcribed conditions") {
  SearchSpec s;
  s.kind = Kind::Scgdd3;
  s.params = {{"m", 2}, {"n", 4}};
  CHECK(ingredient_exists(s) == Existence::Yes);

  s.params = {{"m", 1}, {"n", 5}};
  CHECK(ingredient_exists(s) == Existence::No);

  s.kind = Kind::StrictGdd;
  s.params = {{"m", 2}, {"n", 6}};
  CHECK(ingredient_exists(s) == Existence::No);
}

TEST_CASE("find_mgdd") {
  auto m = find_mgdd(3, 3);
  CHECK(m.n == 3);
  CHECK(m.s == 3);
  CHECK(verify_mgdd(m).pass);
  CHECK(verify_mgdd(find_mgdd(5, 3)).pass);
  CHECK(verify_mgdd(find_mgdd(3, 4)).pass);
}

TEST_CASE("find_scgdd") {
  auto g = find_scgdd(3, 2, 4);
  CHECK(verify_scgdd(g).pass);
  CHECK_THROWS_WITH_AS(find_scgdd(3, 1, 5),
                       doctest::Contains("KnownNonexistent"), Error);
}

TEST_CASE("find_pbd") {
  CHECK(verify_pbd(find_pbd(7, {3})).pass);
  CHECK(verify_pbd(find_pbd(10, {3, 4})).pass);
}

TEST_CASE("find_strict_gdd returns a verified family") {
  auto f = find_strict_gdd(1, 7, {3});
  CHECK(f.modulus() == 7);
  CHECK(verify_difference_family(f).pass);

  auto f2 = find_strict_gdd(2, 4, {3});
  CHECK(f2.modulus() == 8);
  CHECK(verify_difference_family(f2).pass);
}

TEST_CASE("find_df and find_chdm") {
  auto f = find_df(2, 7, 1, DfFlavor::Cdf, {3});
  CHECK(f.modulus() == 14);
  CHECK(verify_difference_family(f).pass);

  auto c = find_chdm(2, 4);
  CHECK(c.w == 2);
  CHECK(c.t == 4);
  CHECK(verify_chdm(c).pass);
}

TEST_CASE("find_schgdd and exhaust_schgdd") {
  auto d = find_schgdd(4, 1, 3);
  CHECK(verify_schgdd(d).pass);

  CHECK(exhaust_schgdd(3, 1, 3) == ExhaustOutcome::Found);
  CHECK(exhaust_schgdd(3, 2, 3) == ExhaustOutcome::Refuted);
  CHECK(exhaust_schgdd(3, 4, 3, 10) == ExhaustOutcome::Exhausted);
}

TEST_CASE("cache round trip through DF_CACHE_DIR") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "scd-test-cache";
  fs::remove_all(dir);
  setenv("DF_CACHE_DIR", dir.c_str(), 1);

  auto f1 = find_df(2, 9, 1, DfFlavor::Cdf, {3});
  CHECK(verify_difference_family(f1).pass);
  bool has_entry = false;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") has_entry = true;
  CHECK(has_entry);

  auto f2 = find_df(2, 9, 1, DfFlavor::Cdf, {3});  // served from cache
  CHECK(f2.blocks == f1.blocks);

  setenv("DF_CACHE_DIR", "", 1);
  fs::remove_all(dir);
}

TEST_CASE("determinism: identical spec gives identical output") {
  setenv("DF_CACHE_DIR", "", 1);
  auto a = find_df(4, 7, 1, DfFlavor::Cdf, {3, 5});
  auto b = find_df(4, 7, 1, DfFlavor::Cdf, {3, 5});
  CHECK(a.blocks == b.blocks);
}

TEST_CASE("find_ingredient dispatches on the spec kind") {
  SearchSpec s;
  s.kind = Kind::Mgdd;
  s.params = {{"s", 3}, {"n", 3}};
  auto j = find_ingredient(s);
  CHECK(j.is_object());
  CHECK(s.key().find("mgdd") != std::string::npos);
}
