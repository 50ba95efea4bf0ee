#include "scd/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "scd/verify.hpp"

namespace scd::cons {

namespace {

void require_verified(const SchgddDesign& d, const char* who) {
  auto rep = verify_schgdd(d);
  if (!rep.pass)
    throw Error("VerificationFailed",
                std::string(who) + " output failed verification: " + rep.summary());
}

void require_h_perfect(const SchgddDesign& d, int h, const char* who) {
  auto rep = verify_h_perfect(d, h);
  if (!rep.pass)
    throw Error("PerfectionViolation",
                std::string(who) + " not " + std::to_string(h) +
                    "-perfect: " + rep.summary());
}

int crt(int a, int ma, int b, int mb) {
  // gcd(ma, mb) = 1 assumed; smallest non-negative solution.
  for (int r = a % ma; ; r += ma)
    if (r % mb == b % mb) return r;
}

}  // namespace

SchgddDesign c31_fill(const SchgddDesign& outer, const SchgddDesign& inner) {
  const int g = inner.m, w = inner.t, t = outer.t;
  if (outer.n != inner.n || outer.m != g * w || outer.k != inner.k)
    throw Error("ShapeMismatch", "c31 expects outer (n,(gw)^t), inner (n,g^w)");
  SchgddDesign out;
  out.n = outer.n;
  out.m = g;
  out.t = w * t;
  out.k = outer.k;
  const int M = out.modulus();
  out.base_blocks = outer.base_blocks;  // residues already live in Z_{gwt}
  for (const auto& b : inner.base_blocks) {
    BaseBlock nb;
    for (const auto& p : b.points) nb.points.push_back({p.group, mod(p.residue * t, M)});
    nb.canonicalize();
    out.base_blocks.push_back(std::move(nb));
  }
  out.recipe = RecipeNode("c31_fill", {{"g", g}, {"w", w}, {"t", t}},
                          {outer.recipe, inner.recipe});
  out.canonicalize();
  require_verified(out, "c31_fill");
  return out;
}

SchgddDesign c32_inflate(const Scgdd& outer,
                         const std::map<int, SchgddDesign>& inners) {
  if (inners.empty()) throw Error("MissingInner", "no inner designs supplied");
  const int w = inners.begin()->second.m;
  const int t = inners.begin()->second.t;
  const int l = inners.begin()->second.k;
  for (const auto& [k, d] : inners)
    if (d.n != k || d.m != w || d.t != t)
      throw Error("ShapeMismatch", "inner for k=" + std::to_string(k) +
                                       " must be (k,w^t) with shared (w,t)");
  SchgddDesign out;
  out.n = outer.n;
  out.m = outer.m * w;
  out.t = t;
  out.k = l;
  const int M = out.modulus();
  const int wt = w * t;
  const int g = outer.m;
  std::vector<RecipeNode> kids;
  if (std::gcd(wt, g) == 1) {
    // Map (x,y) to the unique z = y (mod wt), z = x (mod g): an additive
    // isomorphism Z_wt x Z_g = Z_gwt, so inner and outer difference covers
    // combine without representative-lift carries.
    for (const auto& B : outer.base_blocks) {
      auto pts = B.points;
      std::sort(pts.begin(), pts.end());
      auto it = inners.find(static_cast<int>(pts.size()));
      if (it == inners.end())
        throw Error("MissingInner", "no inner design for block size " +
                                        std::to_string(pts.size()));
      for (const auto& A : it->second.base_blocks) {
        BaseBlock nb;
        for (const auto& p : A.points) {
          const auto& [a, x] = pts[p.group];
          nb.points.push_back({a, crt(p.residue, wt, x, g)});
        }
        nb.canonicalize();
        out.base_blocks.push_back(std::move(nb));
      }
    }
  } else {
    // Non-coprime case: the naive embedding y + wt*x can double-cover
    // differences because lifting a Z_wt difference into Z_gwt picks up a
    // per-instance carry.  Each outer block may carry its own relabeled
    // copy of the inner design, so backtrack over a (group permutation,
    // translate) choice per outer block until every cross pair is covered
    // exactly once.
    struct Slot {
      std::vector<Point> pts;                // sorted outer block
      const SchgddDesign* inner = nullptr;
    };
    std::vector<Slot> slots;
    for (const auto& B : outer.base_blocks) {
      Slot s;
      s.pts = B.points;
      std::sort(s.pts.begin(), s.pts.end());
      auto it = inners.find(static_cast<int>(s.pts.size()));
      if (it == inners.end())
        throw Error("MissingInner", "no inner design for block size " +
                                        std::to_string(s.pts.size()));
      s.inner = &it->second;
      slots.push_back(std::move(s));
    }
    // Pre-pass: look for representative translates of the inner base blocks
    // under which the carry of lifting an ascending-pair difference from
    // Z_wt into Z_gwt depends only on the difference value.  Sorting every
    // outer block (a transitive orientation) then makes one shared profile
    // correct against any outer difference cover, with no global search.
    {
      struct IB {
        const SchgddDesign* d;
        size_t idx;
      };
      std::vector<IB> ibs;
      for (const auto& [k, d] : inners)
        for (size_t j = 0; j < d.base_blocks.size(); ++j)
          ibs.push_back({&d, j});
      std::vector<int> sign(wt, -2);  // -2 unset; else 0 (no wrap) or 1
      std::map<const SchgddDesign*, std::vector<int>> profile;
      for (const auto& [k, d] : inners)
        profile[&d].assign(d.base_blocks.size(), 0);
      std::function<bool(size_t)> pick = [&](size_t i) -> bool {
        if (i == ibs.size()) return true;
        const auto& pts = ibs[i].d->base_blocks[ibs[i].idx].points;
        for (int s = 0; s < wt; ++s) {
          std::vector<std::pair<int, int>> set_here;
          bool ok = true;
          for (size_t a = 0; a < pts.size() && ok; ++a)
            for (size_t b = a + 1; b < pts.size() && ok; ++b) {
              int ya = (pts[a].residue + s) % wt, yb = (pts[b].residue + s) % wt;
              int delta = mod(ya - yb, wt);
              int c = ya < yb ? 1 : 0;
              if (sign[delta] == -2) {
                sign[delta] = c;
                set_here.push_back({delta, c});
              } else if (sign[delta] != c) {
                ok = false;
              }
            }
          if (ok) {
            profile[ibs[i].d][ibs[i].idx] = s;
            if (pick(i + 1)) return true;
          }
          for (auto& [delta, c] : set_here) sign[delta] = -2;
        }
        return false;
      };
      if (pick(0)) {
        for (const auto& B : outer.base_blocks) {
          auto pts = B.points;
          std::sort(pts.begin(), pts.end());
          auto it = inners.find(static_cast<int>(pts.size()));
          if (it == inners.end())
            throw Error("MissingInner", "no inner design for block size " +
                                            std::to_string(pts.size()));
          const auto& shifts = profile[&it->second];
          for (size_t j = 0; j < it->second.base_blocks.size(); ++j) {
            BaseBlock nb;
            for (const auto& p : it->second.base_blocks[j].points) {
              const auto& [a, x] = pts[p.group];
              nb.points.push_back(
                  {a, mod((p.residue + shifts[j]) % wt + 1LL * wt * x, M)});
            }
            nb.canonicalize();
            out.base_blocks.push_back(std::move(nb));
          }
        }
        for (const auto& [k, d] : inners) kids.push_back(d.recipe);
        out.recipe = RecipeNode(
            "c32_inflate", {{"g", outer.m}, {"n", outer.n}, {"w", w}, {"t", t}},
            kids);
        out.canonicalize();
        require_verified(out, "c32_inflate");
        return out;
      }
    }
    const int n = outer.n;
    std::vector<std::vector<char>> used(n * n, std::vector<char>(M, 0));
    long long nodes = 0;
    constexpr long long kNodeBudget = 50'000'000;
    auto block_for = [&](const Slot& s, const std::vector<int>& perm, int mult,
                         const BaseBlock& A, int shift) {
      BaseBlock nb;
      for (const auto& p : A.points) {
        const auto& [a, x] = s.pts[perm[p.group]];
        nb.points.push_back(
            {a, mod((1LL * mult * p.residue + shift) % wt + 1LL * wt * x, M)});
      }
      return nb;
    };
    std::vector<int> units;
    for (int u = 1; u < wt; ++u)
      if (std::gcd(u, wt) == 1) units.push_back(u);
    auto conflict_free = [&](const BaseBlock& b) {
      for (const auto& p : b.points)
        for (const auto& q : b.points) {
          if (p.group == q.group) continue;
          if (used[p.group * n + q.group][mod(p.residue - q.residue, M)])
            return false;
        }
      return true;
    };
    auto mark = [&](const BaseBlock& b, int delta) {
      for (const auto& p : b.points)
        for (const auto& q : b.points) {
          if (p.group == q.group) continue;
          used[p.group * n + q.group][mod(p.residue - q.residue, M)] +=
              static_cast<char>(delta);
        }
    };
    auto all_perms = [](int k) {
      std::vector<int> p(k);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::vector<int>> out;
      do out.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      return out;
    };
    // Three nested decision levels per outer block: a group relabeling, a
    // unit multiplier of Z_wt (an automorphism of the inner design), and a
    // representative translate per inner base block.
    std::function<bool(size_t)> solve_outer = [&](size_t i) -> bool {
      if (i == slots.size()) return true;
      const Slot& s = slots[i];
      const auto& inner_blocks = s.inner->base_blocks;
      std::function<bool(const std::vector<int>&, int, size_t)> solve_inner =
          [&](const std::vector<int>& perm, int mult, size_t j) -> bool {
        if (j == inner_blocks.size()) return solve_outer(i + 1);
        for (int shift = 0; shift < wt; ++shift) {
          if (++nodes > kNodeBudget)
            throw Error("BudgetExhausted", "c32_inflate relabeling search");
          BaseBlock nb = block_for(s, perm, mult, inner_blocks[j], shift);
          if (!conflict_free(nb)) continue;
          mark(nb, +1);
          nb.canonicalize();
          out.base_blocks.push_back(nb);
          if (solve_inner(perm, mult, j + 1)) return true;
          out.base_blocks.pop_back();
          mark(block_for(s, perm, mult, inner_blocks[j], shift), -1);
        }
        return false;
      };
      for (const auto& perm : all_perms(static_cast<int>(s.pts.size())))
        for (int mult : units)
          if (solve_inner(perm, mult, 0)) return true;
      return false;
    };
    if (!solve_outer(0))
      throw Error("Unsupported",
                  "c32_inflate: no consistent inner relabeling found");
  }
  for (const auto& [k, d] : inners) kids.push_back(d.recipe);
  out.recipe = RecipeNode(
      "c32_inflate", {{"g", outer.m}, {"n", outer.n}, {"w", w}, {"t", t}}, kids);
  out.canonicalize();
  require_verified(out, "c32_inflate");
  return out;
}

SchgddDesign c33_from_strict_gdd(const DifferenceFamily& gdd,
                                 const std::map<int, Mgdd>& inners) {
  if (gdd.h != 1)
    throw Error("ShapeMismatch", "strictly cyclic GDD must have h=1");
  const int w = gdd.g, t = gdd.t;
  if (inners.empty()) throw Error("MissingInner", "no MGDDs supplied");
  const int n = inners.begin()->second.n;
  SchgddDesign out;
  out.n = n;
  out.m = w;
  out.t = t;
  out.k = 3;
  std::vector<RecipeNode> kids;
  for (const auto& B : gdd.blocks) {
    auto sorted = B;
    std::sort(sorted.begin(), sorted.end());
    auto it = inners.find(static_cast<int>(sorted.size()));
    if (it == inners.end())
      throw Error("MissingInner",
                  "no MGDD for block size " + std::to_string(sorted.size()));
    const Mgdd& mg = it->second;
    if (mg.n != n || mg.s != static_cast<int>(sorted.size()))
      throw Error("ShapeMismatch", "MGDD shape must be |B|^n");
    for (const auto& A : mg.blocks) {
      BaseBlock nb;
      for (const auto& p : A) nb.points.push_back({p.group, sorted[p.residue]});
      nb.canonicalize();
      out.base_blocks.push_back(std::move(nb));
    }
  }
  kids.push_back(gdd.recipe);
  out.recipe = RecipeNode("c33_from_strict_gdd", {{"w", w}, {"t", t}, {"n", n}},
                          kids);
  out.canonicalize();
  require_verified(out, "c33_from_strict_gdd");
  return out;
}

SchgddDesign c34_cdm_product(const SchgddDesign& base, const Cdm& cdm) {
  if (cdm.k != base.k)
    throw Error("ShapeMismatch", "CDM row count must equal block size");
  const int w = base.m, t = base.t, v = cdm.m;
  SchgddDesign out;
  out.n = base.n;
  out.m = w * v;
  out.t = t;
  out.k = base.k;
  const int M = out.modulus();
  const int wt = w * t;
  for (const auto& B : base.base_blocks) {
    for (int j = 0; j < v; ++j) {
      BaseBlock nb;
      for (int i = 0; i < B.size(); ++i)
        nb.points.push_back(
            {B.points[i].group,
             mod(B.points[i].residue + 1LL * wt * cdm.rows[i][j], M)});
      nb.canonicalize();
      out.base_blocks.push_back(std::move(nb));
    }
  }
  out.recipe = RecipeNode("c34_cdm_product", {{"v", v}, {"w", w}, {"t", t}},
                          {base.recipe, RecipeNode("cdm", {{"k", cdm.k}, {"m", cdm.m}})});
  out.canonicalize();
  require_verified(out, "c34_cdm_product");
  return out;
}

SchgddDesign c35_chdm_weave(const SchgddDesign& base, const SchgddDesign& hw,
                            const Chdm& chdm) {
  const int w = base.m, t = base.t;
  const int h = chdm.w, hg = chdm.modulus();
  const int g = hg / h;
  if (chdm.k != base.k || hw.k != base.k || hw.n != base.n)
    throw Error("ShapeMismatch", "c35 ingredient shapes disagree");
  if (hw.m != h * w || hw.t != t)
    throw Error("ShapeMismatch", "c35 middle design must be (n,(hw)^t)");
  if (std::gcd(w * t, hg) != 1)
    throw Error("GcdViolation", "gcd(wt,hg) must be 1");
  SchgddDesign out;
  out.n = base.n;
  out.m = h * g * w;
  out.t = t;
  out.k = base.k;
  const int wt = w * t;
  // Part 1: weave each base block with every CHDM column.
  for (const auto& B : base.base_blocks) {
    for (int j = 0; j < chdm.cols(); ++j) {
      BaseBlock nb;
      for (int i = 0; i < B.size(); ++i)
        nb.points.push_back({B.points[i].group,
                             crt(B.points[i].residue, wt, chdm.rows[i][j], hg)});
      nb.canonicalize();
      out.base_blocks.push_back(std::move(nb));
    }
  }
  // Part 2: embed the (n,(hw)^t) design on Z_{wt} x H, H = gZ_{hg}.
  const int hwt = h * w * t;
  for (const auto& B : hw.base_blocks) {
    BaseBlock nb;
    for (const auto& p : B.points) {
      int y = p.residue;
      nb.points.push_back({p.group, crt(y % wt, wt, g * (y % h) % hg, hg)});
    }
    nb.canonicalize();
    out.base_blocks.push_back(std::move(nb));
  }
  (void)hwt;
  out.recipe = RecipeNode("c35_chdm_weave",
                          {{"w", w}, {"t", t}, {"h", h}, {"g", g}},
                          {base.recipe, hw.recipe, chdm.recipe});
  out.canonicalize();
  require_verified(out, "c35_chdm_weave");
  return out;
}

SchgddDesign c36_perfect_weave(const SchgddDesign& perfect,
                               const SchgddDesign& hperf, const Chdm& chdm) {
  const int w = perfect.m, t = perfect.t;
  const int h = chdm.w, hg = chdm.modulus();
  const int g = hg / h;
  if (chdm.k != perfect.k || hperf.k != perfect.k || hperf.n != perfect.n)
    throw Error("ShapeMismatch", "c36 ingredient shapes disagree");
  if (hperf.m != h * w || hperf.t != t)
    throw Error("ShapeMismatch", "c36 middle design must be (n,(hw)^t)");
  require_h_perfect(perfect, 1, "c36 base ingredient");
  require_h_perfect(hperf, h, "c36 middle ingredient");
  SchgddDesign out;
  out.n = perfect.n;
  out.m = h * g * w;
  out.t = t;
  out.k = perfect.k;
  const int M = out.modulus();
  const int wt = w * t;
  // Part 1: offset the non-zero entries of each normalized perfect block by
  // the CHDM column differences (rows 2..k against row 1), in block order.
  for (const auto& B0 : perfect.base_blocks) {
    BaseBlock B = normalize_block(B0, wt);
    B.canonicalize();
    for (int j = 0; j < chdm.cols(); ++j) {
      BaseBlock nb;
      int row = 1;  // rows 2..k in matrix terms (0-indexed: 1..k-1)
      for (const auto& p : B.points) {
        if (p.residue == 0) {
          nb.points.push_back({p.group, 0});
        } else {
          int off = mod(chdm.rows[row][j] - chdm.rows[0][j], hg);
          nb.points.push_back({p.group, mod(p.residue + 1LL * off * wt, M)});
          ++row;
        }
      }
      nb.canonicalize();
      out.base_blocks.push_back(std::move(nb));
    }
  }
  // Part 2: rescale y*wt -> y*wt*g in each normalized h-perfect block.
  const int hwt = h * w * t;
  for (const auto& B0 : hperf.base_blocks) {
    BaseBlock B = normalize_block(B0, hwt);
    BaseBlock nb;
    for (const auto& p : B.points) {
      int x = p.residue % wt;  // strip position (x <= wt/2 by perfection)
      int y = p.residue / wt;
      nb.points.push_back({p.group, mod(x + 1LL * y * wt * g, M)});
    }
    nb.canonicalize();
    out.base_blocks.push_back(std::move(nb));
  }
  out.recipe = RecipeNode("c36_perfect_weave",
                          {{"w", w}, {"t", t}, {"h", h}, {"g", g}},
                          {perfect.recipe, hperf.recipe, chdm.recipe});
  out.canonicalize();
  require_verified(out, "c36_perfect_weave");
  require_h_perfect(out, h * g, "c36_perfect_weave");
  return out;
}

SchgddDesign c37_perfect_from_pdf(const DifferenceFamily& fam,
                                  const std::map<int, Mgdd>& inners) {
  if (fam.flavor == DfFlavor::Cdf)
    throw Error("ShapeMismatch", "c37 needs a PDF / h-PDF ingredient");
  auto rep = verify_difference_family(fam);
  if (!rep.pass)
    throw Error("VerificationFailed", "c37 family invalid: " + rep.summary());
  // Reuse the c33 placement over Z_{hgt}, then check perfection.
  DifferenceFamily as_gdd = fam;
  as_gdd.g = fam.h * fam.g;  // strictly cyclic (hw)^t shape
  as_gdd.h = 1;
  as_gdd.flavor = DfFlavor::Cdf;
  SchgddDesign out = c33_from_strict_gdd(as_gdd, inners);
  out.recipe = RecipeNode("c37_perfect_from_pdf",
                          {{"h", fam.h}, {"w", fam.g}, {"t", fam.t}},
                          {fam.recipe});
  require_h_perfect(out, fam.h, "c37_perfect_from_pdf");
  return out;
}

}  // namespace scd::cons
