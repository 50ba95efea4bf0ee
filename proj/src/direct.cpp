#include "scd/direct.hpp"

#include <algorithm>
#include <string>

#include "scd/catalog.hpp"
#include "scd/constructions.hpp"
#include "scd/families.hpp"
#include "scd/search.hpp"
#include "scd/sequences.hpp"
#include "scd/verify.hpp"

namespace scd::direct {
namespace {

void require_schgdd(const SchgddDesign& d, const std::string& what) {
  auto rep = verify_schgdd(d);
  if (!rep.pass) throw Error("VerificationFailed", what + ": " + rep.summary());
}

void require_chdm(const Chdm& c, const std::string& what) {
  auto rep = verify_chdm(c);
  if (!rep.pass) throw Error("VerificationFailed", what + ": " + rep.summary());
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long modpow(long long b, long long e, long long m) {
  long long r = 1;
  b %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
  }
  return r;
}

bool is_qr(int a, int p) {  // nonzero quadratic residue
  a = mod(a, p);
  if (a == 0) return false;
  return modpow(a, (p - 1) / 2, p) == 1;
}

int smallest_primitive_root(int p) {
  std::vector<int> primes;
  int n = p - 1;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) primes.push_back(n);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : primes)
      if (modpow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("Internal", "no primitive root found mod " + std::to_string(p));
}

// Inner holey group divisible designs for the strict-GDD compositions:
// one per block size, on 3 groups.
std::map<int, Mgdd> mgdd_inners_3(const DifferenceFamily& f, long long budget) {
  std::map<int, Mgdd> inners;
  for (const auto& b : f.blocks) {
    int k = static_cast<int>(b.size());
    if (!inners.count(k)) inners[k] = search::find_mgdd(k, 3, budget);
  }
  return inners;
}

Chdm to_chdm(const SchgddDesign& d, const std::string& what) {
  Chdm c = schgdd_to_chdm(d);
  require_chdm(c, what);
  return c;
}

// The two 20-block template tables behind the (6,2^p) construction, with the
// Z_p coordinate written as cx*x + cb.
struct TplPt {
  int grp, y, cx, cb;
};
using TplBlock = std::array<TplPt, 3>;

const std::vector<TplBlock>& templates_1mod4() {
  static const std::vector<TplBlock> v = {
      {{{0, 0, 0, 0}, {1, 0, 0, 1}, {2, 1, 1, 0}}},
      {{{0, 0, 0, 0}, {1, 1, 0, 1}, {2, 0, 1, 1}}},
      {{{0, 0, 0, 0}, {1, 0, 1, 0}, {3, 1, 0, 1}}},
      {{{0, 0, 0, 0}, {1, 1, 1, 1}, {3, 0, 0, 1}}},
      {{{0, 0, 0, 0}, {2, 0, 0, 1}, {4, 1, 1, 0}}},
      {{{0, 0, 0, 0}, {2, 1, 0, 1}, {4, 0, 1, 1}}},
      {{{0, 0, 0, 0}, {3, 0, 1, 0}, {5, 0, 0, 1}}},
      {{{0, 0, 0, 0}, {3, 1, 1, 1}, {5, 1, 0, 1}}},
      {{{0, 0, 0, 0}, {4, 0, 0, 1}, {5, 0, 1, 0}}},
      {{{0, 0, 0, 0}, {4, 1, 0, 1}, {5, 1, 1, 1}}},
      {{{1, 0, 0, 0}, {2, 0, 0, 1}, {5, 0, 1, 1}}},
      {{{1, 0, 0, 0}, {2, 0, 1, 1}, {5, 1, 0, 1}}},
      {{{1, 0, 0, 0}, {3, 0, 0, 1}, {4, 0, 1, 0}}},
      {{{1, 0, 0, 0}, {3, 0, 1, 0}, {4, 1, 0, 1}}},
      {{{1, 0, 0, 0}, {4, 0, 0, 1}, {5, 1, 1, 1}}},
      {{{1, 1, 0, 0}, {4, 0, 1, 0}, {5, 1, 0, 1}}},
      {{{2, 0, 0, 1}, {3, 0, 0, 0}, {4, 0, 1, 0}}},
      {{{2, 1, 0, 1}, {3, 0, 0, 0}, {4, 1, 1, 1}}},
      {{{2, 0, 0, 0}, {3, 0, 1, 0}, {5, 1, 0, 1}}},
      {{{2, 1, 0, 0}, {3, 0, 1, 1}, {5, 1, 0, 1}}}};
  return v;
}

const std::vector<TplBlock>& templates_3mod4() {
  static const std::vector<TplBlock> v = {
      {{{0, 0, 0, 0}, {1, 0, 0, 1}, {2, 1, 1, 0}}},
      {{{0, 0, 0, 0}, {1, 1, 0, 1}, {2, 0, 1, 1}}},
      {{{0, 0, 0, 0}, {1, 0, 1, 0}, {3, 1, 0, 1}}},
      {{{0, 0, 0, 0}, {1, 1, 1, 0}, {3, 0, 0, -1}}},
      {{{0, 0, 0, 0}, {2, 0, 0, 1}, {4, 1, 1, 0}}},
      {{{0, 0, 0, 0}, {2, 1, 0, 1}, {4, 0, 1, 1}}},
      {{{0, 0, 0, 0}, {3, 0, 0, 1}, {5, 0, 1, 0}}},
      {{{0, 0, 0, 0}, {3, 1, 1, 0}, {5, 1, 0, 1}}},
      {{{0, 0, 0, 0}, {4, 0, -1, 0}, {5, 0, 0, 1}}},
      {{{0, 0, 0, 0}, {4, 1, 0, 1}, {5, 1, 1, 0}}},
      {{{1, 0, 0, 0}, {2, 0, 0, 1}, {5, 0, 1, 0}}},
      {{{1, 0, 0, 0}, {2, 0, 1, 0}, {5, 1, 0, 1}}},
      {{{1, 0, 0, 0}, {3, 0, 0, 1}, {4, 0, 1, 0}}},
      {{{1, 0, 0, 0}, {3, 0, 1, 0}, {4, 1, 0, 1}}},
      {{{1, 0, 0, 0}, {4, 0, 0, 1}, {5, 1, 1, 0}}},
      {{{1, 1, 0, 0}, {4, 0, 1, 0}, {5, 1, 0, 1}}},
      {{{2, 0, 0, 1}, {3, 0, 0, 0}, {4, 0, 1, 0}}},
      {{{2, 1, 1, 0}, {3, 0, 0, 0}, {4, 1, 0, 1}}},
      {{{2, 0, 0, 0}, {3, 0, -1, 0}, {5, 1, 0, 1}}},
      {{{2, 1, 0, 0}, {3, 0, 1, 0}, {5, 1, 1, 1}}}};
  return v;
}

}  // namespace

SchgddDesign schgdd_3_1t(int t) {
  if (t < 3 || t % 2 == 0)
    throw Error("ParityViolation",
                "(3,1^t) needs odd t >= 3 (t=" + std::to_string(t) + ")");
  SchgddDesign d;
  d.n = 3;
  d.m = 1;
  d.t = t;
  d.k = 3;
  for (int x = 1; x < t; ++x) {
    BaseBlock b;
    b.points = {{0, 0}, {1, x}, {2, mod(2LL * x, t)}};
    b.canonicalize();
    d.base_blocks.push_back(std::move(b));
  }
  d.recipe = RecipeNode("schgdd_3_1t", {{"t", t}});
  d.canonicalize();
  require_schgdd(d, "schgdd_3_1t");
  return d;
}

Cdm cdm_odd(int m) {
  if (m < 1 || m % 2 == 0)
    throw Error("ParityViolation", "(3,m)-CDM needs odd m");
  Cdm c;
  c.k = 3;
  c.m = m;
  c.rows.assign(3, std::vector<int>(m));
  for (int j = 0; j < m; ++j) {
    c.rows[0][j] = 0;
    c.rows[1][j] = j;
    c.rows[2][j] = mod(2LL * j, m);
  }
  auto rep = verify_cdm(c);
  if (!rep.pass) throw Error("VerificationFailed", "cdm_odd: " + rep.summary());
  return c;
}

Chdm chdm_3_2t(int t, long long budget) {
  if (t < 4)
    throw Error("Unsupported", "(3,2t;2)-CHDM needs t >= 4 (t=" +
                                   std::to_string(t) + ")");
  const int M = 2 * t;
  if (t % 4 <= 1) {
    auto s = seq::find_extended_skolem(t - 1, t, budget);
    Chdm c;
    c.k = 3;
    c.w = 2;
    c.t = t;
    c.rows.assign(3, {});
    for (int i = 1; i < t; ++i) {
      int ai = s.values[i - 1];
      // Column pair (0, i, a_i) and (0, -i, a_i - i).
      c.rows[0].push_back(0);
      c.rows[1].push_back(i);
      c.rows[2].push_back(mod(ai, M));
      c.rows[0].push_back(0);
      c.rows[1].push_back(mod(-i, M));
      c.rows[2].push_back(mod(ai - i, M));
    }
    c.recipe = RecipeNode("chdm_3_2t:skolem", {{"t", t}});
    require_chdm(c, "chdm_3_2t");
    return c;
  }
  if (t == 14 || t == 15) {
    auto c = catalog::chdm("L5.4:t=" + std::to_string(t));
    require_chdm(c, "chdm_3_2t:catalog");
    return c;
  }
  if (t == 6 || t == 11 || t == 18 || t == 27) {
    auto c = search::find_chdm(2, t, budget);
    c.recipe = RecipeNode("chdm_3_2t:search", {{"t", t}}, {c.recipe});
    return c;
  }
  // Remaining t = 2,3 mod 4, t >= 7: strictly cyclic {3,4,5}-GDD of type 2^t
  // from a doubled odd-order PDF, filled with holey designs on 3 groups.
  auto gdd = fam::pdf_double(fam::build_pdf_345(2 * t - 1, budget));
  auto design = cons::c33_from_strict_gdd(gdd, mgdd_inners_3(gdd, budget));
  return to_chdm(design, "chdm_3_2t:pdf-route");
}

Chdm chdm_3_4t(int t, long long budget) {
  if (t < 4)
    throw Error("Unsupported", "(3,4t;4)-CHDM needs t >= 4 (t=" +
                                   std::to_string(t) + ")");
  if (t == 5 || t == 8 || t == 11) {
    auto c = catalog::chdm("L5.5:t=" + std::to_string(t));
    require_chdm(c, "chdm_3_4t:catalog");
    return c;
  }
  DifferenceFamily fam_4t = t % 2 == 0 ? fam::build_pdf_4t(t, budget)
                                       : fam::build_cdf_4t_odd(t, budget);
  auto inners = mgdd_inners_3(fam_4t, budget);
  SchgddDesign design = t % 2 == 0
                            ? cons::c37_perfect_from_pdf(fam_4t, inners)
                            : cons::c33_from_strict_gdd(fam_4t, inners);
  return to_chdm(design, "chdm_3_4t");
}

Chdm chdm_3_2xt(int x, int t, long long budget) {
  if (x < 3 || t < 5)
    throw Error("Unsupported",
                "(3,2^x t;2^x)-CHDM needs x >= 3, t >= 5 (x=" +
                    std::to_string(x) + ", t=" + std::to_string(t) + ")");
  if (t % 2 == 1) {
    // Odd t: weave the order-2^x matrix through the gcd-1 pair.
    auto base = schgdd_3_1t(t);
    auto hw = chdm_to_schgdd(chdm_3_2t(t, budget));
    auto chdm = chdm_3_2t(1 << (x - 1), budget);
    auto design = cons::c35_chdm_weave(base, hw, chdm);
    return to_chdm(design, "chdm_3_2xt:weave");
  }
  if (x == 3 && t == 6) {
    auto c = catalog::chdm("L5.6:x=3,t=6");
    require_chdm(c, "chdm_3_2xt:catalog");
    return c;
  }
  if (x <= 4) {  // even t >= 6
    if (x == 3) {
      auto fam2p = fam::build_2pdf_8t(t, budget);
      auto design =
          cons::c37_perfect_from_pdf(fam2p, mgdd_inners_3(fam2p, budget));
      return to_chdm(design, "chdm_3_2xt:2pdf-route");
    }
    auto fam_cdf = fam::build_cdf_16t(t, budget);
    auto design =
        cons::c33_from_strict_gdd(fam_cdf, mgdd_inners_3(fam_cdf, budget));
    return to_chdm(design, "chdm_3_2xt:cdf-route");
  }
  auto perfect_from = [&](const DifferenceFamily& f) {
    return cons::c37_perfect_from_pdf(f, mgdd_inners_3(f, budget));
  };
  if (t == 6) {
    if (x == 5) {
      auto design = perfect_from(fam::catalog_family("Ex2.10:g=16,t=6"));
      return to_chdm(design, "chdm_3_2xt:t6-x5");
    }
    if (x == 6) {
      auto perfect4 = perfect_from(fam::build_pdf_4t(6, budget));
      auto hperf16 = perfect_from(fam::catalog_family("Ex2.11"));
      auto design =
          cons::c36_perfect_weave(perfect4, hperf16, chdm_3_4t(4, budget));
      return to_chdm(design, "chdm_3_2xt:t6-x6");
    }
    auto perfect16 = perfect_from(fam::catalog_family("Ex2.9:g=16,t=6"));
    auto hperf32 = perfect_from(fam::catalog_family("Ex2.10:g=16,t=6"));
    auto design = cons::c36_perfect_weave(perfect16, hperf32,
                                          chdm_3_2t(1 << (x - 5), budget));
    return to_chdm(design, "chdm_3_2xt:t6");
  }
  if (t == 8) {
    if (x == 5) {
      auto cdf = fam::catalog_family("Ex:cdf-256-32");
      auto design = cons::c33_from_strict_gdd(cdf, mgdd_inners_3(cdf, budget));
      return to_chdm(design, "chdm_3_2xt:t8-x5");
    }
    auto perfect8 = perfect_from(fam::catalog_family("Ex2.9:g=8,t=8"));
    auto hperf16 = perfect_from(fam::catalog_family("Ex2.10:g=8,t=8"));
    auto design = cons::c36_perfect_weave(perfect8, hperf16,
                                          chdm_3_2t(1 << (x - 4), budget));
    return to_chdm(design, "chdm_3_2xt:t8");
  }
  // Even t >= 10, x >= 5.
  auto perfect4 = perfect_from(fam::build_pdf_4t(t, budget));
  auto hperf8 = perfect_from(fam::build_2pdf_8t(t, budget));
  auto design = cons::c36_perfect_weave(perfect4, hperf8,
                                        chdm_3_2t(1 << (x - 3), budget));
  return to_chdm(design, "chdm_3_2xt:even-t");
}

SchgddDesign schgdd_6_3_3() {
  auto data = catalog::design("L6.7");
  if (!data) throw Error("UnknownId", "catalog entry L6.7 missing");
  SchgddDesign d;
  d.n = 6;
  d.m = 3;
  d.t = 3;
  d.k = 3;
  // Development by (+1,-) mod (5,-): groups 0..4 rotate, group 5 is fixed.
  for (const auto& seed : data->seeds_pt)
    for (int r = 0; r < 5; ++r) {
      BaseBlock b;
      for (const auto& p : seed)
        b.points.push_back({p.group == 5 ? 5 : (p.group + r) % 5, p.residue});
      b.canonicalize();
      d.base_blocks.push_back(std::move(b));
    }
  d.recipe = RecipeNode("catalog:L6.7");
  d.canonicalize();
  require_schgdd(d, "schgdd_6_3_3");
  return d;
}

int weil_find_x(int p) {
  if (!is_prime(p) || p < 5)
    throw Error("NotPrime", "p must be a prime >= 5 (p=" + std::to_string(p) + ")");
  for (int x = 2; x < p; ++x)
    if (!is_qr(x, p) && !is_qr(x + 1, p) && mod(x + 1, p) != 0 && is_qr(x - 1, p))
      return x;
  throw Error("Internal", "no qualifying residue mod " + std::to_string(p));
}

SchgddDesign schgdd_6_2p(int p) {
  if (!is_prime(p) || p < 3)
    throw Error("NotPrime", "p must be a prime >= 3 (p=" + std::to_string(p) + ")");
  SchgddDesign d;
  d.n = 6;
  d.m = 2;
  d.t = p;
  d.k = 3;
  if (p == 3) {
    auto data = catalog::design("L6.11:p=3");
    if (!data) throw Error("UnknownId", "catalog entry L6.11:p=3 missing");
    for (const auto& blk : data->blocks) {
      BaseBlock b;
      b.points = blk;
      b.canonicalize();
      d.base_blocks.push_back(std::move(b));
    }
    d.recipe = RecipeNode("catalog:L6.11:p=3");
  } else {
    const int x = weil_find_x(p);
    const int w = smallest_primitive_root(p);
    const auto& tpl = p % 4 == 1 ? templates_1mod4() : templates_3mod4();
    auto crt = [&](int y, int z) {  // Z_2 x Z_p -> Z_{2p}
      for (int r = 0; r < 2 * p; ++r)
        if (r % 2 == y && r % p == z) return r;
      throw Error("Internal", "crt");
    };
    for (int r = 0; r < (p - 1) / 2; ++r) {
      const long long mult = modpow(w, 2LL * r, p);
      for (const auto& blk : tpl) {
        BaseBlock b;
        for (const auto& pt : blk) {
          int z = mod(static_cast<long long>(pt.cx) * x + pt.cb, p);
          z = static_cast<int>(z * mult % p);
          b.points.push_back({pt.grp, crt(pt.y, z)});
        }
        b.canonicalize();
        d.base_blocks.push_back(std::move(b));
      }
    }
    d.recipe = RecipeNode("schgdd_6_2p", {{"p", p}, {"x", x}, {"omega", w}});
  }
  d.canonicalize();
  require_schgdd(d, "schgdd_6_2p");
  return d;
}

SchgddDesign schgdd_small_2cubed(int n) {
  static const std::map<int, std::string> ids = {
      {10, "L7.1"}, {15, "L7.2"}, {18, "L7.3"}, {27, "L7.4"}};
  auto it = ids.find(n);
  if (it == ids.end())
    throw Error("Unsupported",
                "(n,2^3) table only for n in {10,15,18,27} (n=" +
                    std::to_string(n) + ")");
  auto data = catalog::design(it->second);
  if (!data) throw Error("UnknownId", "catalog entry " + it->second + " missing");
  SchgddDesign d;
  d.n = n;
  d.m = 2;
  d.t = 3;
  d.k = 3;
  // Seeds live on I_{6n}; the second listed permutation adds s inside each
  // length-n row, the relabeling sends v to (v mod n, v div n).
  const int s = data->beta_step, order = data->beta_order;
  for (const auto& seed : data->seeds_int)
    for (int e = 0; e < order; ++e) {
      BaseBlock b;
      for (int v : seed) {
        int v2 = n * (v / n) + ((v % n) + e * s) % n;
        b.points.push_back({v2 % n, v2 / n});
      }
      b.canonicalize();
      d.base_blocks.push_back(std::move(b));
    }
  d.recipe = RecipeNode("catalog:" + it->second);
  d.canonicalize();
  require_schgdd(d, "schgdd_small_2cubed");
  return d;
}

NonexistenceOutcome prove_nonexistence_exhaustive(int n, int m, int t,
                                                  long long budget) {
  switch (search::exhaust_schgdd(n, m, t, budget)) {
    case search::ExhaustOutcome::Found:
      return NonexistenceOutcome::Found;
    case search::ExhaustOutcome::Refuted:
      return NonexistenceOutcome::Nonexistent;
    default:
      return NonexistenceOutcome::Exhausted;
  }
}

}  // namespace scd::direct
