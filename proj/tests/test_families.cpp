#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "scd/catalog.hpp"
#include "scd/families.hpp"
#include "scd/verify.hpp"

using namespace scd;
using namespace scd::fam;

TEST_CASE("catalog_family returns the verbatim tables") {
  auto a = catalog_family("A:v=95");
  CHECK(a.blocks.size() == 7);
  CHECK(a.blocks.front() == std::vector<int>({0, 2, 9, 21, 46}));

  auto e = catalog_family("Ex2.9:g=8,t=8");
  CHECK(e.blocks.size() == 7);
  CHECK(e.blocks.front() == std::vector<int>({0, 1, 3, 7, 26}));

  auto b = catalog_family("B:t=12");
  CHECK(b.blocks.size() == 5);
  CHECK(b.blocks.front() == std::vector<int>({0, 1, 3, 9, 20}));

  CHECK_THROWS_WITH_AS(catalog_family("A:v=9999"),
                       doctest::Contains("UnknownId"), Error);
}

TEST_CASE("extend_pdf_six") {
  auto base = catalog_family("ExPDF:v=13");
  auto out = extend_pdf_six(base, 13);
  CHECK(out.modulus() == 91);
  CHECK(verify_difference_family(out).pass);

  auto v33 = catalog_family("ExPDF:v=33");
  CHECK_THROWS_AS(extend_pdf_six(v33, 34), Error);  // u = 2 mod 4 parity gate
}

TEST_CASE("pdf_double reinterprets an odd-order family with g=2") {
  auto out = pdf_double(catalog_family("A:v=83"));
  CHECK(out.g == 2);
  CHECK(out.modulus() == 84);
  CHECK(verify_difference_family(out).pass);

  auto d13 = pdf_double(catalog_family("ExPDF:v=13"));
  CHECK(d13.modulus() == 14);
  CHECK(verify_difference_family(d13).pass);
}

TEST_CASE("build_pdf_4t") {
  auto f6 = build_pdf_4t(6);
  REQUIRE(f6.blocks.size() == 1);
  CHECK(f6.blocks[0] == std::vector<int>({0, 1, 4, 9, 11}));
  CHECK(verify_difference_family(f6).pass);

  auto f14 = build_pdf_4t(14);
  CHECK(f14.blocks.size() == 4);
  CHECK(f14.blocks.front() == std::vector<int>({0, 1, 9, 22, 25}));
  CHECK(verify_difference_family(f14).pass);

  auto f60 = build_pdf_4t(60);  // recursion branch
  CHECK(f60.modulus() == 240);
  CHECK(verify_difference_family(f60).pass);

  CHECK_THROWS_AS(build_pdf_4t(8), Error);
  CHECK_THROWS_AS(build_pdf_4t(5), Error);
}

TEST_CASE("build_2pdf_8t") {
  auto f8 = build_2pdf_8t(8);
  CHECK(f8.blocks.size() == 7);
  CHECK(f8.blocks.front() == std::vector<int>({0, 1, 3, 7, 44}));
  CHECK(f8.h == 2);
  CHECK(verify_difference_family(f8).pass);

  auto f24 = build_2pdf_8t(24);
  CHECK(verify_difference_family(f24).pass);
  std::vector<int> a1 = {0, 25, 46, 100, 140};
  bool has_a1 = false;
  for (auto b : f24.blocks) {
    std::sort(b.begin(), b.end());
    if (b == a1) has_a1 = true;
  }
  CHECK(has_a1);

  auto f20 = build_2pdf_8t(20);
  CHECK(verify_difference_family(f20).pass);
}

TEST_CASE("build_cdf_4t_odd") {
  auto f9 = build_cdf_4t_odd(9);
  REQUIRE(f9.blocks.size() == 3);
  CHECK(f9.blocks[0] == std::vector<int>({0, 1, 3, 13, 17}));
  CHECK(f9.blocks[1] == std::vector<int>({0, 5, 11}));
  CHECK(f9.blocks[2] == std::vector<int>({0, 7, 15}));
  CHECK(verify_difference_family(f9).pass);

  auto f29 = build_cdf_4t_odd(29);
  CHECK(f29.blocks.size() == 14);
  CHECK(verify_difference_family(f29).pass);

  auto f27 = build_cdf_4t_odd(27);
  CHECK(verify_difference_family(f27).pass);
}

TEST_CASE("build_cdf_16t") {
  auto f12 = build_cdf_16t(12);
  CHECK(f12.blocks.size() == 27);
  CHECK(f12.blocks.front() == std::vector<int>({0, 1, 34}));
  CHECK(verify_difference_family(f12).pass);

  auto f14 = build_cdf_16t(14);
  CHECK(f14.blocks.size() == 30);
  CHECK(f14.blocks.front() == std::vector<int>({0, 1, 39}));
  CHECK(verify_difference_family(f14).pass);

  auto f36 = build_cdf_16t(36);
  CHECK(verify_difference_family(f36).pass);
}

TEST_CASE("build_pdf_345") {
  auto f59 = build_pdf_345(59);
  CHECK(f59.blocks.size() == 4);
  CHECK(f59.blocks.front() == std::vector<int>({0, 1, 6, 23, 26}));
  CHECK(verify_difference_family(f59).pass);

  auto f7 = build_pdf_345(7);
  REQUIRE(f7.blocks.size() == 1);
  CHECK(f7.blocks[0] == std::vector<int>({0, 1, 3}));

  auto f83 = build_pdf_345(83);
  CHECK(f83.blocks == catalog_family("A:v=83").blocks);

  auto f413 = build_pdf_345(413);  // recursion from v=59, u=59
  CHECK(f413.modulus() == 413);
  CHECK(verify_difference_family(f413).pass);
}

TEST_CASE("unreachable instances fail with external-gap provenance") {
  try {
    build_pdf_4t(22, 200000);
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.code == "Unsupported");
    CHECK(std::string(e.what()).find("external-gap") != std::string::npos);
  }
}
