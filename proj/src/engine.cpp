#include "scd/engine.hpp"

#include <sstream>
#include <string>

#include "scd/constructions.hpp"
#include "scd/direct.hpp"
#include "scd/families.hpp"
#include "scd/search.hpp"
#include "scd/verify.hpp"

namespace scd::engine {
namespace {

void require_pass(const SchgddDesign& d, const std::string& what) {
  auto rep = verify_schgdd(d);
  if (!rep.pass) throw Error("VerificationFailed", what + ": " + rep.summary());
}

// A (v,K,1)-PBD is exactly a K-SCGDD of type 1^v (the one cross difference
// per pair is covered once); this shim lets block-inflation consume it.
Scgdd pbd_as_scgdd(const Pbd& p) {
  Scgdd s;
  s.n = p.v;
  s.m = 1;
  for (const auto& blk : p.blocks) {
    BaseBlock b;
    for (int x : blk) b.points.push_back({x, 0});
    b.canonicalize();
    s.base_blocks.push_back(std::move(b));
  }
  return s;
}

SchgddDesign tensor_cdm(SchgddDesign d, int factor) {
  if (factor == 1) return d;
  return cons::c34_cdm_product(d, direct::cdm_odd(factor));
}

SchgddDesign build(int n, int m, int t, long long budget);

// (6,2^t) for odd t >= 3: peel one prime p off t, lift the prime design by a
// CDM, and fill with the cofactor design.
SchgddDesign build_6_2t(int t, long long budget) {
  int p = t;
  for (int d = 3; d * d <= t; d += 2)
    if (t % d == 0) {
      p = d;
      break;
    }
  if (p == t) return direct::schgdd_6_2p(t);
  const int q = t / p;
  auto lifted = cons::c34_cdm_product(direct::schgdd_6_2p(p), direct::cdm_odd(q));
  return cons::c31_fill(lifted, build_6_2t(q, budget));
}

// (6,m^3) for m = 3 mod 6.
SchgddDesign build_6_m3(int m, long long budget) {
  return tensor_cdm(direct::schgdd_6_3_3(), m / 3);
}

// (6,1^t) for odd t not 3,15 mod 18, t >= 5.
SchgddDesign build_6_1t(int t, long long budget) {
  if (t % 6 == 1 || t % 6 == 5) return search::find_schgdd(6, 1, t, budget);
  // t = 9 mod 18: t = 3^r u with u = 1,5 mod 6, r >= 2.
  int r = 0, u = t;
  while (u % 3 == 0) {
    u /= 3;
    ++r;
  }
  int p3r = t / u;  // 3^r
  SchgddDesign s0 = p3r == 9 ? search::find_schgdd(6, 1, 9, budget)
                             : cons::c31_fill(build_6_m3(p3r / 3, budget),
                                              build_6_1t(p3r / 3, budget));
  if (u == 1) return s0;
  auto lifted = cons::c34_cdm_product(s0, direct::cdm_odd(u));
  return cons::c31_fill(lifted, search::find_schgdd(6, 1, u, budget));
}

std::map<int, Mgdd> mgdd_inners(const DifferenceFamily& f, int n,
                                long long budget) {
  std::map<int, Mgdd> inners;
  for (const auto& b : f.blocks) {
    int k = static_cast<int>(b.size());
    if (!inners.count(k)) inners[k] = search::find_mgdd(k, n, budget);
  }
  return inners;
}

SchgddDesign build_n3(int m, int t, long long budget) {
  if (m % 2 == 1)
    return tensor_cdm(direct::schgdd_3_1t(t), m);
  if (m % 4 == 2)
    return tensor_cdm(chdm_to_schgdd(direct::chdm_3_2t(t, budget)), m / 2);
  // m = 0 mod 4.
  if (t >= 4 && (m % 12 == 0 || (m % 12 != 0 && t % 3 == 1))) {
    // Preferred route when a strictly cyclic {3}-GDD of type m^t turns up
    // fast; otherwise fall through to the 2-adic decomposition below.
    try {
      auto gdd = search::find_strict_gdd(
          m, t, {3}, std::min<long long>(budget, 2'000'000));
      return cons::c33_from_strict_gdd(gdd, mgdd_inners(gdd, 3, budget));
    } catch (const Error&) {
    }
  }
  int x = 0, u = m;
  while (u % 2 == 0) {
    u /= 2;
    ++x;
  }
  Chdm c = x == 2 ? direct::chdm_3_4t(t, budget)
                  : direct::chdm_3_2xt(x, t, budget);
  return tensor_cdm(chdm_to_schgdd(c), u);
}

SchgddDesign build_n4(int m, int t, long long budget) {
  if (m % 2 == 0)
    return cons::c32_inflate(search::find_scgdd(3, m, 4, budget),
                             {{3, direct::schgdd_3_1t(t)}});
  return tensor_cdm(search::find_schgdd(4, 1, t, budget), m);
}

SchgddDesign build_n5(int m, int t, long long budget) {
  if (m % 3 == 0)
    return cons::c32_inflate(search::find_scgdd(3, m, 5, budget),
                             {{3, direct::schgdd_3_1t(t)}});
  if (m % 12 == 2 || m % 12 == 10) {  // t = 1 mod 6 here
    auto gdd = fam::pdf_double(fam::build_pdf_345(2 * t - 1, budget));
    auto base = cons::c33_from_strict_gdd(gdd, mgdd_inners(gdd, 5, budget));
    return tensor_cdm(base, m / 2);
  }
  auto gdd = search::find_strict_gdd(m, t, {3}, budget);
  return cons::c33_from_strict_gdd(gdd, mgdd_inners(gdd, 5, budget));
}

SchgddDesign build_n6(int m, int t, long long budget) {
  if (m % 4 == 2)
    return tensor_cdm(build_6_2t(t, budget), m / 2);
  if (m % 4 == 0)
    return cons::c32_inflate(search::find_scgdd(3, m, 6, budget),
                             {{3, direct::schgdd_3_1t(t)}});
  // m odd.
  if (t % 18 == 3 || t % 18 == 15) {  // m = 3 mod 6 here
    if (t == 3) return tensor_cdm(direct::schgdd_6_3_3(), m / 3);
    auto three_t = cons::c31_fill(build_6_m3(t, budget), build(6, 3, t / 3, budget));
    return tensor_cdm(three_t, m / 3);
  }
  return tensor_cdm(build_6_1t(t, budget), m);
}

SchgddDesign build_n8(int m, int t, long long budget) {
  if (m % 6 == 0)
    return cons::c32_inflate(search::find_scgdd(3, m, 8, budget),
                             {{3, direct::schgdd_3_1t(t)}});
  if (m % 6 == 3)
    return cons::c32_inflate(search::find_scgdd(4, 3, 8, budget),
                             {{4, build(4, m / 3, t, budget)}});
  auto gdd = search::find_strict_gdd(m, t, {3}, budget);
  return cons::c33_from_strict_gdd(gdd, mgdd_inners(gdd, 8, budget));
}

// (n,2^3) for n = 0,1 mod 3, n >= 4.
SchgddDesign build_2cubed(int n, long long budget) {
  if (n == 4 || n == 6) return build(n, 2, 3, budget);
  if (n == 10 || n == 15 || n == 18 || n == 27)
    return direct::schgdd_small_2cubed(n);
  if (n == 9 || n == 12 || n == 24)
    return cons::c32_inflate(search::find_scgdd(3, 2, n, budget),
                             {{3, direct::schgdd_3_1t(3)}});
  if (n == 7 || n == 19)
    return cons::c32_inflate(search::find_scgdd(4, 2, n, budget),
                             {{4, build(4, 1, 3, budget)}});
  auto pbd = search::find_pbd(n, {4, 6, 7, 9}, budget);
  std::map<int, SchgddDesign> inners;
  for (const auto& b : pbd.blocks) {
    int k = static_cast<int>(b.size());
    if (!inners.count(k)) inners.emplace(k, build(k, 2, 3, budget));
  }
  return cons::c32_inflate(pbd_as_scgdd(pbd), inners);
}

SchgddDesign inflate_pbd(int n, int m, int t, const std::vector<int>& K,
                         long long budget) {
  auto pbd = search::find_pbd(n, K, budget);
  std::map<int, SchgddDesign> inners;
  for (const auto& b : pbd.blocks) {
    int k = static_cast<int>(b.size());
    if (!inners.count(k)) inners.emplace(k, build(k, m, t, budget));
  }
  return cons::c32_inflate(pbd_as_scgdd(pbd), inners);
}

// n = 0,1 mod 3, n >= 7.
SchgddDesign build_big_01(int n, int m, int t, long long budget) {
  if (t == 3 && m % 2 == 0) {
    if (m % 4 == 0)
      return cons::c32_inflate(search::find_scgdd(3, m, n, budget),
                               {{3, direct::schgdd_3_1t(3)}});
    return tensor_cdm(build_2cubed(n, budget), m / 2);
  }
  return inflate_pbd(n, m, t, {3, 4}, budget);
}

// n = 2 mod 3, n >= 11.
SchgddDesign build_big_2(int n, int m, int t, long long budget) {
  if (t == 3 && m % 2 == 0) {  // m = 0 mod 6 here
    if (m % 12 == 0)
      return cons::c32_inflate(search::find_scgdd(3, m, n, budget),
                               {{3, direct::schgdd_3_1t(3)}});
    // m = 6 mod 12
    if (m == 6)
      return cons::c32_inflate(search::find_scgdd(4, 6, n, budget),
                               {{4, build(4, 1, 3, budget)}});
    return tensor_cdm(build(n, 6, 3, budget), m / 6);
  }
  return inflate_pbd(n, m, t, {3, 4, 5}, budget);
}

SchgddDesign build(int n, int m, int t, long long budget) {
  SchgddDesign d;
  switch (n) {
    case 3:
      d = build_n3(m, t, budget);
      break;
    case 4:
      d = build_n4(m, t, budget);
      break;
    case 5:
      d = build_n5(m, t, budget);
      break;
    case 6:
      d = build_n6(m, t, budget);
      break;
    case 8:
      d = build_n8(m, t, budget);
      break;
    default:
      d = n % 3 == 2 ? build_big_2(n, m, t, budget)
                     : build_big_01(n, m, t, budget);
      break;
  }
  if (d.n != n || d.m != m || d.t != t)
    throw Error("Internal", "resolver produced wrong type (" +
                                std::to_string(d.n) + "," + std::to_string(d.m) +
                                "^" + std::to_string(d.t) + ")");
  return d;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists:
      return "Exists";
    case Verdict::Nonexistent:
      return "Nonexistent";
    case Verdict::PossibleException:
      return "PossibleException";
    case Verdict::InfeasibleNecessary:
      return "InfeasibleNecessary";
    default:
      return "OutOfTheoremScope";
  }
}

Feasibility feasibility(int n, int m, int t) {
  if (n < 3 || m < 1 || t < 1)
    throw Error("OutOfRange", "need n >= 3, m >= 1, t >= 1");
  if (t < 3)
    return {Verdict::InfeasibleNecessary, "t >= 3 is required"};
  if (n == 3) {
    if (m % 2 == 0 && t == 3)
      return {Verdict::Nonexistent, "Theorem 1.6 exception"};
    if (((t - 1) % 2) * (m % 2) == 1)
      return {Verdict::Nonexistent, "Theorem 1.6 parity condition: (t-1)m odd"};
    return {Verdict::Exists, "Theorem 1.6"};
  }
  const long long count = static_cast<long long>(t - 1) * n * (n - 1) * m;
  if (count % 6 != 0)
    return {Verdict::InfeasibleNecessary,
            "(t-1)n(n-1)m = 0 mod 6 fails (Lemma 1.5)"};
  if (t % 2 == 0)
    return {Verdict::OutOfTheoremScope,
            "Theorem 1.7 covers odd t only; necessary conditions hold"};
  if (n == 6 && m == 1 && t == 3)
    return {Verdict::Nonexistent, "Theorem 1.7 exception"};
  if (n == 6 && (m % 6 == 1 || m % 6 == 5) && (t % 18 == 3 || t % 18 == 15))
    return {Verdict::PossibleException, "Theorem 1.7 possible exception (1)"};
  if (n == 8 && (m % 12 == 2 || m % 12 == 10) && t % 12 == 7)
    return {Verdict::PossibleException, "Theorem 1.7 possible exception (2)"};
  return {Verdict::Exists, "Theorem 1.7"};
}

SchgddDesign build_schgdd(int n, int m, int t, long long budget, bool force) {
  auto f = feasibility(n, m, t);
  switch (f.verdict) {
    case Verdict::Exists:
      break;
    case Verdict::Nonexistent:
    case Verdict::InfeasibleNecessary:
      throw Error("InfeasibleRequest", f.reason);
    default:
      if (!force) throw Error("OpenCase", f.reason);
      // Outside the theorems: raw bounded search only; any success is a
      // local finding, flagged as such.
      {
        auto d = search::find_schgdd(n, m, t, budget);
        d.recipe = RecipeNode("open-case-search",
                              {{"open_case_resolved_locally", 1}}, {d.recipe});
        return d;
      }
  }
  auto d = build(n, m, t, budget);
  require_pass(d, "build_schgdd(" + std::to_string(n) + "," +
                      std::to_string(m) + "^" + std::to_string(t) + ")");
  return d;
}

Chdm build_chdm(int m, int t, long long budget) {
  Chdm c = schgdd_to_chdm(build_schgdd(3, m, t, budget));
  auto rep = verify_chdm(c);
  if (!rep.pass)
    throw Error("VerificationFailed", "build_chdm: " + rep.summary());
  return c;
}

namespace {

void explain_rec(const RecipeNode& node, int depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << (node.rule.empty() ? "?" : node.rule);
  if (!node.params.empty()) {
    out << " (";
    bool first = true;
    for (const auto& [k, v] : node.params) {
      if (k == "nodes" || k == "budget") continue;
      if (!first) out << ", ";
      out << k << "=" << v;
      first = false;
    }
    if (node.params.count("budget") || node.params.count("nodes")) {
      if (!first) out << "; ";
      out << "search(budget=";
      out << (node.params.count("budget") ? node.params.at("budget") : 0);
      out << ", nodes=";
      out << (node.params.count("nodes") ? node.params.at("nodes") : 0);
      out << ")";
    }
    out << ")";
  }
  out << "\n";
  for (const auto& ch : node.children) explain_rec(ch, depth + 1, out);
}

}  // namespace

std::string explain(const RecipeNode& recipe) {
  std::ostringstream out;
  explain_rec(recipe, 0, out);
  return out.str();
}

std::string explain(const SchgddDesign& d) { return explain(d.recipe); }
std::string explain(const Chdm& c) { return explain(c.recipe); }
std::string explain(const DifferenceFamily& f) { return explain(f.recipe); }

}  // namespace scd::engine
