#include "scd/families.hpp"

#include <algorithm>
#include <string>

#include "scd/catalog.hpp"
#include "scd/search.hpp"
#include "scd/sequences.hpp"
#include "scd/verify.hpp"

namespace scd::fam {
namespace {

// Additive triples (a,b,c), a + b = c taken mod the family modulus; each
// contributes the block {0, a, c} whose differences are {a, b, c} up to sign.
using Triple = std::array<long long, 3>;

void require_pass(const DifferenceFamily& f, const std::string& what) {
  auto rep = verify_difference_family(f);
  if (!rep.pass) throw Error("VerificationFailed", what + ": " + rep.summary());
}

std::vector<int> mk_block(int M, std::initializer_list<long long> xs) {
  std::vector<int> b;
  for (long long x : xs) b.push_back(mod(x, M));
  return b;
}

void add_triples(std::vector<std::vector<int>>& blocks, int M,
                 const std::vector<Triple>& ts) {
  for (const auto& t : ts) blocks.push_back({0, mod(t[0], M), mod(t[2], M)});
}

// The segment triples supplied by an additive triple partition, scaled by a
// constant factor (2 for the order-4t families, 4 for the order-16t ones).
std::vector<Triple> scaled(const seq::TriplePartition& p, int factor) {
  std::vector<Triple> out;
  for (const auto& tr : p.triples)
    out.push_back({static_cast<long long>(tr[0]) * factor,
                   static_cast<long long>(tr[1]) * factor,
                   static_cast<long long>(tr[2]) * factor});
  return out;
}

// j-indexed schedule {a0 + sa*j, b0 + sb*j, c0 + sc*j} for j in [0, hi]
// minus an explicit skip set.
void sched(std::vector<Triple>& out, long long a0, long long sa, long long b0,
           long long sb, long long c0, long long sc, long long hi,
           std::initializer_list<long long> skips = {}) {
  for (long long j = 0; j <= hi; ++j) {
    bool skip = false;
    for (long long s : skips)
      if (j == s) skip = true;
    if (!skip) out.push_back({a0 + sa * j, b0 + sb * j, c0 + sc * j});
  }
}

RecipeNode node(std::string rule, std::map<std::string, long long> params = {},
                std::vector<RecipeNode> children = {}) {
  return RecipeNode(std::move(rule), std::move(params), std::move(children));
}

// Branches the source text delegates to outside literature: serve them with a
// bounded verified search, else report the coverage hole honestly.
DifferenceFamily external_gap(int g, int t, int h, DfFlavor flavor,
                              const std::vector<int>& K, long long budget,
                              const std::string& what) {
  try {
    auto f = search::find_df(g, t, h, flavor, K, budget);
    f.recipe = node("external-gap", {{"g", g}, {"t", t}, {"h", h}}, {f.recipe});
    return f;
  } catch (const Error& e) {
    if (e.code == "BudgetExhausted" || e.code == "NotFound")
      throw Error("Unsupported",
                  what + " [external-gap: search fallback gave up (" + e.code +
                      ")]");
    throw;
  }
}

}  // namespace

DifferenceFamily catalog_family(const std::string& id) {
  return catalog::family(id);
}

DifferenceFamily extend_pdf_six(const DifferenceFamily& base, int u,
                                long long budget) {
  if (base.g != 1 || base.h != 1 || base.flavor != DfFlavor::Pdf)
    throw Error("PredicateFail", "extend_pdf_six needs a (v,K,1)-PDF base");
  const int v = base.modulus();
  const bool parity_ok = (v % 4 == 1 && (u % 4 == 0 || u % 4 == 1)) ||
                         (v % 4 == 3 && (u % 4 == 0 || u % 4 == 3));
  if (u < v || !parity_ok)
    throw Error("PredicateFail", "extend_pdf_six: (v=" + std::to_string(v) +
                                     ", u=" + std::to_string(u) +
                                     ") fails the extension predicate");
  const int d = (v + 1) / 2;
  auto pairs = seq::pair_cover(1, 2 * u, std::nullopt, d, budget);
  if (!pairs)
    throw Error("NotFound", "extend_pdf_six: no pair cover for (v=" +
                                std::to_string(v) + ", u=" + std::to_string(u) +
                                ")");
  DifferenceFamily out;
  out.g = 1;
  out.t = 6 * u + v;
  out.h = 1;
  out.flavor = DfFlavor::Pdf;
  out.blocks = base.blocks;
  const int off = (v - 1) / 2 + u;
  const int M = out.modulus();
  for (auto [x, y] : *pairs) out.blocks.push_back(mk_block(M, {0, x + off, y + off}));
  out.recipe = node("extend_pdf_six", {{"v", v}, {"u", u}}, {base.recipe});
  require_pass(out, "extend_pdf_six");
  return out;
}

DifferenceFamily pdf_double(const DifferenceFamily& base) {
  if (base.g != 1 || base.h != 1 || base.flavor != DfFlavor::Pdf ||
      base.t % 2 == 0)
    throw Error("PredicateFail", "pdf_double needs an odd-order (v,K,1)-PDF");
  DifferenceFamily out;
  out.g = 2;
  out.t = (base.t + 1) / 2;
  out.h = 1;
  out.flavor = DfFlavor::Pdf;
  out.blocks = base.blocks;
  out.recipe = node("pdf_double", {{"v", base.t}}, {base.recipe});
  require_pass(out, "pdf_double");
  return out;
}

DifferenceFamily holey_pdf_4(const DifferenceFamily& base, int u,
                             long long budget) {
  if (base.g != 1 || base.h != 1 || base.flavor != DfFlavor::Pdf)
    throw Error("PredicateFail", "holey_pdf_4 needs a (v,K,1)-PDF base");
  const int v = base.modulus();
  if (mod(2LL * u - v, 4) != 3)
    throw Error("PredicateFail",
                "holey_pdf_4: 2u-v must be 3 mod 4 (v=" + std::to_string(v) +
                    ", u=" + std::to_string(u) + ")");
  const int d = (v + 1) / 2;
  const int c = (2 * u - v + 5) / 4;
  auto pairs = seq::find_langford_pairs(u, d, c, budget);
  DifferenceFamily out;
  out.g = 4;
  out.t = (v + 6 * u + 3) / 4;
  out.h = 1;
  out.flavor = DfFlavor::Pdf;
  out.blocks = base.blocks;
  const int off = (v - 1) / 2 + u;
  const int M = out.modulus();
  for (auto [x, y] : pairs.pairs)
    out.blocks.push_back(mk_block(M, {0, x + off, y + off}));
  out.recipe = node("holey_pdf_4", {{"v", v}, {"u", u}, {"c", c}}, {base.recipe});
  require_pass(out, "holey_pdf_4");
  return out;
}

DifferenceFamily build_pdf_4t(int t, long long budget) {
  if (t % 2 != 0 || t < 4 || t == 8)
    throw Error("PredicateFail",
                "build_pdf_4t: t must be even, >= 4, != 8 (t=" +
                    std::to_string(t) + ")");
  DifferenceFamily out;
  if (t % 6 == 0) {
    if (t <= 54) {
      out = catalog_family("B:t=" + std::to_string(t));
    } else {
      const int u = 2 * (t - 9) / 3;
      out = holey_pdf_4(catalog_family("ExPDF:v=33"), u, budget);
    }
  } else if (t % 6 == 2) {
    if (t >= 14 && t <= 110) {
      out = catalog_family("C:t=" + std::to_string(t));
    } else {
      const int u = 2 * (t - 17) / 3;
      out = holey_pdf_4(build_pdf_345(65, budget), u, budget);
    }
  } else {
    return external_gap(4, t, 1, DfFlavor::Pdf, {3, 5}, budget,
                        "build_pdf_4t(t=" + std::to_string(t) + ")");
  }
  out.recipe = node("build_pdf_4t", {{"t", t}}, {out.recipe});
  require_pass(out, "build_pdf_4t");
  return out;
}

DifferenceFamily build_2pdf_8t(int t, long long budget) {
  if (t % 2 != 0 || t < 8)
    throw Error("PredicateFail",
                "build_2pdf_8t: t must be even, >= 8 (t=" + std::to_string(t) +
                    ")");
  if (t == 8 || t == 12 || t == 14 || t == 18) {
    auto f = catalog_family("L8t:t=" + std::to_string(t));
    f.recipe = node("build_2pdf_8t", {{"t", t}}, {f.recipe});
    return f;
  }
  if (t % 6 == 4)
    return external_gap(4, t, 2, DfFlavor::Hpdf, {3, 5}, budget,
                        "build_2pdf_8t(t=" + std::to_string(t) + ")");
  const int M = 8 * t;
  DifferenceFamily out;
  out.g = 4;
  out.t = t;
  out.h = 2;
  out.flavor = DfFlavor::Hpdf;
  std::vector<Triple> ts;
  if (t % 6 == 0) {  // t >= 24
    auto part = seq::find_triple_partition(3, t / 3 - 3, t / 2, budget);
    auto seg = scaled(part, 2);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 13, 2, 5 * t - 9, -1, 5 * t + 4, 1, t / 2 - 11);
    sched(ts, t + 3, 2, 9 * t / 2 - 3, -1, 11 * t / 2, 1, t / 2 - 10);
    const std::vector<Triple> fixed = {
        {2, 9, 11},
        {t - 7, 5 * t + 2, 6 * t - 5},
        {9 * t / 2 - 2, 11 * t / 2 - 5, 2 * t - 7},
        {4, 2 * t - 15, 2 * t - 11},
        {5, 11 * t / 2 - 6, 11 * t / 2 - 1},
        {9 * t / 2 - 1, 11 * t / 2 - 4, 2 * t - 5},
        {3, 5 * t - 2, 5 * t + 1},
        {2 * t - 13, 4 * t + 5, 6 * t - 8},
        {9 * t / 2, 11 * t / 2 - 3, 2 * t - 3},
        {7, 5 * t - 8, 5 * t - 1},
        {2 * t - 9, 4 * t + 6, 6 * t - 3},
        {9 * t / 2 + 1, 11 * t / 2 - 2, 2 * t - 1},
        {1, 6 * t - 2, 6 * t - 1},
        {5 * t - 7, 5 * t + 3, 2 * t - 4}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(mk_block(M, {0, 4 * t + 4, t + 1, 2 * t - 2, 6 * t - 4}));
    out.blocks.push_back(mk_block(M, {0, 4 * t + 3, t - 1, 6 * t - 7, 2 * t - 6}));
  } else {  // t = 2 mod 6, t >= 20
    auto part =
        seq::find_triple_partition(3, (t - 5) / 3, t / 2, budget);
    auto seg = scaled(part, 2);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 11, 2, 5 * t - 6, -1, 5 * t + 5, 1, t / 2 - 9);
    sched(ts, t + 3, 2, 9 * t / 2 - 3, -1, 11 * t / 2, 1, t / 2 - 6);
    const std::vector<Triple> fixed = {
        {4, 5, 9},
        {t - 5, 5 * t + 3, 6 * t - 2},
        {5 * t - 3, 5 * t - 4, 2 * t - 7},
        {3, 5 * t + 1, 5 * t + 4},
        {t - 1, 9 * t / 2 - 1, 11 * t / 2 - 2},
        {9 * t / 2 - 2, 11 * t / 2 - 3, 2 * t - 5},
        {7, 5 * t - 5, 5 * t + 2},
        {1, 9 * t / 2 + 1, 9 * t / 2 + 2},
        {9 * t / 2, 11 * t / 2 - 1, 2 * t - 1},
        {2, 6 * t - 5, 6 * t - 3}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(mk_block(M, {0, 4 * t + 2, t + 1, 2 * t - 2, 6 * t - 1}));
  }
  out.recipe = node("build_2pdf_8t", {{"t", t}});
  require_pass(out, "build_2pdf_8t");
  return out;
}

DifferenceFamily build_cdf_4t_odd(int t, long long budget) {
  if (t % 2 == 0 || t < 7 || t == 11)
    throw Error("PredicateFail",
                "build_cdf_4t_odd: t must be odd, >= 7, != 11 (t=" +
                    std::to_string(t) + ")");
  if (t == 9 || t == 15 || t == 17 || t == 23 || t == 29 || t == 35 || t == 41) {
    auto f = catalog_family("F:t=" + std::to_string(t));
    f.recipe = node("build_cdf_4t_odd", {{"t", t}}, {f.recipe});
    return f;
  }
  if (t % 6 == 1)
    return external_gap(4, t, 1, DfFlavor::Cdf, {3, 5}, budget,
                        "build_cdf_4t_odd(t=" + std::to_string(t) + ")");
  const int M = 4 * t;
  const int r = t % 24;
  DifferenceFamily out;
  out.g = 4;
  out.t = t;
  out.h = 1;
  out.flavor = DfFlavor::Cdf;
  std::vector<Triple> ts;
  if (r == 5 || r == 11) {  // t >= 53
    auto part =
        seq::find_triple_partition(3, (t - 17) / 6, (t - 13) / 2, budget);
    auto seg = scaled(part, 2);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 13, 2, (5 * t - 15) / 2, -1, (5 * t + 11) / 2, 1, (t - 35) / 2,
          {(t - 37) / 2});
    const std::vector<Triple> fixed = {
        {4, t - 24, t - 20},
        {t - 12, 2 * t + 9, 3 * t - 3},
        {2, (5 * t + 1) / 2, (5 * t + 5) / 2},
        {11, t - 18, t - 7},
        {t - 14, 2 * t + 1, 3 * t - 13},
        {(5 * t - 13) / 2, (5 * t - 3) / 2, t - 8},
        {5, 3 * t - 9, 3 * t - 4},
        {9, (5 * t - 9) / 2, (5 * t + 9) / 2},
        {(5 * t - 11) / 2, (5 * t - 1) / 2, t - 6},
        {t - 16, 2 * t + 11, 3 * t - 5},
        {7, (5 * t - 7) / 2, (5 * t + 7) / 2},
        {(5 * t - 5) / 2, (5 * t + 3) / 2, t - 1},
        {t - 10, 2 * t + 4, 3 * t - 6}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(mk_block(M, {0, 1, t - 3, 2 * t + 8, 3 * t - 1}));
    out.blocks.push_back(mk_block(M, {0, 3, t - 2, 2 * t + 6, 3 * t - 7}));
  } else if (r == 17 || r == 23) {  // t >= 47
    auto part =
        seq::find_triple_partition(3, (t - 17) / 6, std::nullopt, budget);
    auto seg = scaled(part, 2);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 11, 2, (5 * t - 13) / 2, -1, (5 * t + 9) / 2, 1, (t - 37) / 2);
    const std::vector<Triple> fixed = {
        {7, t - 14, t - 7},
        {t - 12, 2 * t + 3, 3 * t - 9},
        {5, (5 * t - 5) / 2, (5 * t + 5) / 2},
        {4, t - 24, t - 20},
        {t - 22, 2 * t + 9, 3 * t - 13},
        {(5 * t - 9) / 2, (5 * t - 7) / 2, t - 8},
        {9, 3 * t - 12, 3 * t - 3},
        {t - 18, 2 * t + 10, 3 * t - 8},
        {(5 * t - 11) / 2, (5 * t - 1) / 2, t - 6},
        {t - 16, 2 * t + 11, 3 * t - 5},
        {2, (5 * t + 3) / 2, (5 * t + 7) / 2},
        {(5 * t - 3) / 2, (5 * t + 1) / 2, t - 1},
        {t - 10, 2 * t + 6, 3 * t - 4}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(mk_block(M, {0, 1, t - 3, 2 * t + 8, 3 * t - 1}));
    out.blocks.push_back(mk_block(M, {0, 3, t - 2, 2 * t + 4, 3 * t - 7}));
  } else if (r == 15 || r == 21) {  // t >= 21
    auto part =
        seq::find_triple_partition(2, (t - 9) / 6, (t - 7) / 2, budget);
    auto seg = scaled(part, 2);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 7, 2, (5 * t - 9) / 2, -1, (5 * t + 5) / 2, 1, (t - 17) / 2,
          {(t - 19) / 2});
    const std::vector<Triple> fixed = {
        {5, t - 12, t - 7},
        {t - 8, 2 * t + 5, 3 * t - 3},
        {(5 * t - 7) / 2, (5 * t - 5) / 2, t - 6},
        {3, 3 * t - 7, 3 * t - 4},
        {2, (5 * t - 1) / 2, (5 * t + 3) / 2},
        {(5 * t - 3) / 2, (5 * t + 1) / 2, t - 1}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(mk_block(M, {0, 1, t - 2, 2 * t + 3, 3 * t - 1}));
  } else if (r == 3 || r == 9) {  // t >= 27
    auto part =
        seq::find_triple_partition(2, (t - 9) / 6, std::nullopt, budget);
    auto seg = scaled(part, 2);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 7, 2, (5 * t - 9) / 2, -1, (5 * t + 5) / 2, 1, (t - 19) / 2);
    const std::vector<Triple> fixed = {
        {5, t - 10, t - 5},
        {t - 8, 2 * t + 4, 3 * t - 4},
        {(5 * t - 7) / 2, (5 * t - 5) / 2, t - 6},
        {3, 3 * t - 6, 3 * t - 3},
        {2, (5 * t - 1) / 2, (5 * t + 3) / 2},
        {(5 * t - 3) / 2, (5 * t + 1) / 2, t - 1}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(mk_block(M, {0, 1, t - 2, 2 * t + 3, 3 * t - 1}));
  } else {
    throw Error("Unsupported",
                "build_cdf_4t_odd: no branch for t=" + std::to_string(t));
  }
  out.recipe = node("build_cdf_4t_odd", {{"t", t}});
  require_pass(out, "build_cdf_4t_odd");
  return out;
}

DifferenceFamily build_cdf_16t(int t, long long budget) {
  if (t % 2 != 0 || t < 4)
    throw Error("PredicateFail",
                "build_cdf_16t: t must be even, >= 4 (t=" + std::to_string(t) +
                    ")");
  if (t == 6 || t == 8 || t == 12 || t == 14 || t == 24 || t == 26) {
    // t=6 reuses the (96,16)-PDF example; t=8 the (128,16)-2-PDF example.
    auto f = t == 6   ? catalog_family("Ex2.9:g=16,t=6")
             : t == 8 ? catalog_family("Ex2.10:g=8,t=8")
                      : catalog_family("G:t=" + std::to_string(t));
    f.recipe = node("build_cdf_16t", {{"t", t}}, {f.recipe});
    return f;
  }
  if (t % 6 == 4)
    return external_gap(16, t, 1, DfFlavor::Cdf, {3, 5}, budget,
                        "build_cdf_16t(t=" + std::to_string(t) + ")");
  const int M = 16 * t;
  const int r = t % 12;
  DifferenceFamily out;
  out.g = 16;
  out.t = t;
  out.h = 1;
  out.flavor = DfFlavor::Cdf;
  std::vector<Triple> ts;
  if (r == 0) {  // t >= 36
    auto part = seq::find_triple_partition(3, t / 6 - 2, t / 4, budget);
    auto seg = scaled(part, 4);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 11, 2, 10 * t - 7, -1, 10 * t + 4, 1, t - 8, {2, t / 2 - 5});
    sched(ts, 2 * t + 5, 2, 9 * t - 3, -1, 11 * t + 2, 1, t - 7);
    sched(ts, 6, 4, 3 * t - 2, -2, 3 * t + 4, 2, t / 2 - 3);
    const std::vector<Triple> fixed = {
        {7, 8, 15},
        {t + 1, 11 * t - 3, 12 * t - 2},
        {9 * t - 2, 9 * t - 1, 2 * t - 3},
        {2, 3, 5},
        {2 * t - 8, 2 * t + 3, 4 * t - 5},
        {10 * t - 9, 10 * t + 2, 4 * t - 7},
        {4, 10 * t - 5, 10 * t - 1},
        {2 * t + 2, 10 * t - 6, 12 * t - 4},
        {19 * t / 2 - 2, 21 * t / 2 - 1, 4 * t - 3},
        {9, 10 * t - 3, 10 * t + 6},
        {2 * t - 4, 10 * t + 3, 12 * t - 1},
        {8 * t + 1, 11 * t + 1, 3 * t + 2},
        {1, 11 * t - 2, 11 * t - 1}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(
        mk_block(M, {0, 2 * t + 1, 4 * t - 1, 10 * t - 2, 12 * t - 3}));
  } else if (r == 2) {  // t >= 38
    auto part =
        seq::find_triple_partition(2, (t - 8) / 6, (t + 2) / 4, budget);
    auto seg = scaled(part, 4);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 13, 2, 10 * t - 9, -1, 10 * t + 4, 1, t - 10, {t - 11});
    sched(ts, 2 * t + 5, 2, 9 * t - 4, -1, 11 * t + 1, 1, t - 10, {t / 2 + 4});
    sched(ts, 6, 4, 3 * t - 2, -2, 3 * t + 4, 2, t / 2 - 5, {(t - 6) / 4});
    const std::vector<Triple> fixed = {
        {3, 12 * t - 8, 12 * t - 5},
        {2 * t - 1, 10 * t - 2, 12 * t - 3},
        {8 * t + 4, 7 * t / 2 + 1, 23 * t / 2 + 5},
        {5, 12 * t - 6, 12 * t - 1},
        {2 * t + 4, 10 * t - 6, 12 * t - 2},
        {10 * t - 4, 10 * t + 1, 4 * t - 3},
        {2, 4 * t - 11, 4 * t - 9},
        {2 * t - 5, 9 * t + 2, 11 * t - 3},
        {9 * t - 2, 11 * t - 5, 4 * t - 7},
        {9, 4 * t - 13, 4 * t - 4},
        {t + 2, 9 * t - 3, 10 * t - 1},
        {9 * t - 1, 11 * t - 4, 4 * t - 5},
        {4, 2 * t + 2, 2 * t + 6},
        {1, 11 * t - 2, 11 * t - 1},
        {5 * t / 2 + 1, 17 * t / 2 - 8, 11 * t - 7},
        {7, 2 * t - 9, 2 * t - 2},
        {11, 3 * t + 2, 3 * t + 13}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(
        mk_block(M, {0, 2 * t + 1, 4 * t - 2, 10 * t + 3, 12 * t - 7}));
    out.blocks.push_back(
        mk_block(M, {0, 2 * t + 3, 4 * t - 1, 10 * t + 2, 12 * t - 4}));
  } else if (r == 6) {  // t >= 18
    auto part =
        seq::find_triple_partition(2, t / 6 - 1, (t + 2) / 4, budget);
    auto seg = scaled(part, 4);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 9, 2, 10 * t - 6, -1, 10 * t + 3, 1, t - 7, {2});
    sched(ts, 2 * t + 5, 2, 9 * t - 3, -1, 11 * t + 2, 1, t - 7, {t / 2});
    sched(ts, 10, 4, 3 * t - 4, -2, 3 * t + 6, 2, t / 2 - 4, {(t - 10) / 4});
    const std::vector<Triple> fixed = {
        {6, 7, 13},
        {2, 4 * t - 7, 4 * t - 5},
        {2 * t + 2, 9 * t - 1, 11 * t + 1},
        {1, 3 * t + 4, 3 * t + 5},
        {t + 2, 11 * t - 3, 12 * t - 1},
        {8 * t + 1, 7 * t / 2 + 1, 23 * t / 2 + 2},
        {4, 3 * t - 2, 3 * t + 2},
        {2 * t + 3, 10 * t - 5, 12 * t - 2},
        {5 * t / 2 + 1, 17 * t / 2 - 3, 11 * t - 2},
        {3, 10 * t + 2, 10 * t + 5},
        {2 * t - 3, 10 * t - 1, 12 * t - 4},
        {9 * t - 2, 11 * t - 1, 4 * t - 3},
        {5, 10 * t - 8, 10 * t - 3}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(
        mk_block(M, {0, 2 * t + 1, 4 * t - 1, 10 * t - 2, 12 * t - 3}));
  } else if (r == 8) {  // t >= 20
    auto part = seq::find_triple_partition(2, (t - 8) / 6, t / 4, budget);
    auto seg = scaled(part, 4);
    ts.insert(ts.end(), seg.begin(), seg.end());
    sched(ts, 13, 2, 10 * t - 9, -1, 10 * t + 4, 1, t - 10, {1, t / 2 - 5});
    sched(ts, 2 * t + 5, 2, 9 * t - 4, -1, 11 * t + 1, 1, t - 10);
    sched(ts, 6, 4, 3 * t - 2, -2, 3 * t + 4, 2, t / 2 - 5);
    const std::vector<Triple> fixed = {
        {4, 11, 15},
        {2, 4 * t - 13, 4 * t - 11},
        {10 * t - 2, 10 * t - 1, 4 * t - 3},
        {3, 2 * t - 5, 2 * t - 2},
        {2 * t + 4, 10 * t - 6, 12 * t - 2},
        {9 * t - 2, 11 * t - 5, 4 * t - 7},
        {7, 2 * t - 1, 2 * t + 6},
        {2 * t + 2, 9 * t - 3, 11 * t - 1},
        {9 * t - 1, 11 * t - 3, 4 * t - 4},
        {1, 12 * t - 6, 12 * t - 5},
        {t + 3, 11 * t - 4, 12 * t - 1},
        {19 * t / 2 - 4, 21 * t / 2 - 1, 4 * t - 5},
        {5, 12 * t - 8, 12 * t - 3},
        {10 * t - 10, 10 * t + 1, 4 * t - 9},
        {8 * t + 4, 11 * t - 2, 3 * t + 2},
        {9, 10 * t - 4, 10 * t + 5}};
    ts.insert(ts.end(), fixed.begin(), fixed.end());
    add_triples(out.blocks, M, ts);
    out.blocks.push_back(
        mk_block(M, {0, 2 * t + 1, 4 * t - 2, 10 * t + 3, 12 * t - 7}));
    out.blocks.push_back(
        mk_block(M, {0, 2 * t + 3, 4 * t - 1, 10 * t + 2, 12 * t - 4}));
  } else {
    throw Error("Unsupported",
                "build_cdf_16t: no branch for t=" + std::to_string(t));
  }
  out.recipe = node("build_cdf_16t", {{"t", t}});
  require_pass(out, "build_cdf_16t");
  return out;
}

DifferenceFamily build_pdf_345(int v, long long budget) {
  if (v < 7 || v % 2 == 0)
    throw Error("Unsupported",
                "build_pdf_345: v must be odd and >= 7 (v=" + std::to_string(v) +
                    ")");
  auto tag = [&](DifferenceFamily f) {
    f.recipe = node("build_pdf_345", {{"v", v}}, {f.recipe});
    require_pass(f, "build_pdf_345");
    return f;
  };
  const int r6 = v % 6;
  if (r6 == 1) {
    if (v == 7) {
      DifferenceFamily f;
      f.g = 1;
      f.t = 7;
      f.h = 1;
      f.flavor = DfFlavor::Pdf;
      f.blocks = {{0, 1, 3}};
      f.recipe = node("direct");
      return tag(f);
    }
    if (v == 13) return tag(catalog_family("ExPDF:v=13"));
    if (v >= 91) {
      const int u1 = (v - 13) / 6;
      if (u1 % 4 <= 1) return tag(extend_pdf_six(build_pdf_345(13, budget), u1, budget));
      if (v >= 175)
        return tag(extend_pdf_six(build_pdf_345(25, budget), (v - 25) / 6, budget));
    }
    return tag(external_gap(1, v, 1, DfFlavor::Pdf, {3, 4}, budget,
                            "build_pdf_345(v=" + std::to_string(v) + ")"));
  }
  if (r6 == 3) {
    if (v == 33) return tag(catalog_family("ExPDF:v=33"));
    if (v >= 231) {
      const int u = (v - 33) / 6;
      if (u % 4 == 0 || u % 4 == 3)
        return tag(extend_pdf_six(build_pdf_345(33, budget), u, budget));
      if (u % 4 == 1)
        return tag(extend_pdf_six(build_pdf_345(39, budget), u - 1, budget));
      return tag(extend_pdf_six(build_pdf_345(45, budget), u - 2, budget));
    }
    return tag(external_gap(1, v, 1, DfFlavor::Pdf, {3, 4, 5}, budget,
                            "build_pdf_345(v=" + std::to_string(v) + ")"));
  }
  // v = 5 mod 6.
  if (v == 59 || v == 71)
    return tag(catalog_family("ExPDF:v=" + std::to_string(v)));
  if (auto f = catalog::family_if("A:v=" + std::to_string(v))) return tag(*f);
  const int r24 = v % 24;
  if (v >= 413 && (r24 == 5 || r24 == 11))
    return tag(extend_pdf_six(build_pdf_345(59, budget), (v - 59) / 6, budget));
  if (v >= 455 && (r24 == 17 || r24 == 23))
    return tag(extend_pdf_six(build_pdf_345(65, budget), (v - 65) / 6, budget));
  return tag(external_gap(1, v, 1, DfFlavor::Pdf, {3, 4, 5}, budget,
                          "build_pdf_345(v=" + std::to_string(v) + ")"));
}

}  // namespace scd::fam
