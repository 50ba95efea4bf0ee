#include "scd/verify.hpp"

#include <algorithm>
#include <set>

namespace scd {

void VerificationReport::add(const std::string& category,
                             const std::string& where, long long value,
                             int multiplicity) {
  pass = false;
  if (static_cast<int>(violations.size()) >= kMaxViolations) {
    truncated = true;
    return;
  }
  violations.push_back({category, where, value, multiplicity});
}

json VerificationReport::to_json() const {
  json j;
  j["pass"] = pass;
  j["truncated"] = truncated;
  j["violations"] = json::array();
  for (const auto& v : violations)
    j["violations"].push_back({{"category", v.category},
                               {"where", v.where},
                               {"value", v.value},
                               {"multiplicity", v.multiplicity}});
  return j;
}

std::string VerificationReport::summary() const {
  if (pass) return "pass";
  return "fail (" + std::to_string(violations.size()) +
         (truncated ? "+ violations)" : " violations)");
}

namespace {

std::string pair_label(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Compare a difference multiset against "each element of [0,M) \ forbidden
// exactly once"; report missing / duplicate / forbidden values.
void check_exact_cover(VerificationReport& rep, const std::string& where,
                       const std::vector<int>& counts,
                       const std::vector<char>& forbidden) {
  const int M = static_cast<int>(counts.size());
  for (int v = 0; v < M; ++v) {
    if (forbidden[v]) {
      if (counts[v] > 0) rep.add("forbidden difference", where, v, counts[v]);
    } else if (counts[v] == 0) {
      rep.add("missing difference", where, v, 0);
    } else if (counts[v] > 1) {
      rep.add("duplicate difference", where, v, counts[v]);
    }
  }
}

std::vector<char> multiples_of_t(int M, int t) {
  std::vector<char> f(M, 0);
  for (int x = 0; x < M; x += t) f[x] = 1;
  return f;
}

}  // namespace

VerificationReport verify_schgdd(const SchgddDesign& d) {
  VerificationReport rep;
  const int M = d.m * d.t;
  if (d.n < 3 || d.m < 1 || d.t < 1) {
    rep.add("structural", "parameters", 0, 1);
    return rep;
  }
  // Structure: points in range, distinct groups, distinct holes.
  int bi = 0;
  for (const auto& b : d.base_blocks) {
    std::set<int> groups, holes;
    for (const auto& p : b.points) {
      if (p.group < 0 || p.group >= d.n || p.residue < 0 || p.residue >= M)
        rep.add("structural", "block " + std::to_string(bi), p.residue, 1);
      if (!groups.insert(p.group).second)
        rep.add("same-group pair", "block " + std::to_string(bi), p.group, 1);
      if (!holes.insert(mod(p.residue, d.t)).second)
        rep.add("same-hole pair", "block " + std::to_string(bi),
                mod(p.residue, d.t), 1);
    }
    ++bi;
  }
  const auto forb = multiples_of_t(M, d.t);
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) {
      std::vector<int> counts(M, 0);
      for (const auto& b : d.base_blocks)
        for (const auto& p : b.points) {
          if (p.group != i) continue;
          for (const auto& q : b.points)
            if (q.group == j && !(p == q)) counts[mod(p.residue - q.residue, M)]++;
        }
      if (i == j) {
        for (int v = 0; v < M; ++v)
          if (counts[v] > 0)
            rep.add("same-group difference", pair_label(i, j), v, counts[v]);
      } else {
        check_exact_cover(rep, pair_label(i, j), counts, forb);
      }
    }
  }
  return rep;
}

VerificationReport verify_h_perfect(const SchgddDesign& d, int h) {
  if (h < 1 || d.m % h != 0)
    throw Error("BadShape", "h=" + std::to_string(h) + " does not divide m=" +
                                std::to_string(d.m));
  VerificationReport rep = verify_schgdd(d);
  const int g = d.m / h;
  const int gt = g * d.t;
  const int M = d.m * d.t;
  std::vector<char> allowed(M, 0);
  for (int x = 0; x <= gt / 2; ++x) {
    if (x % d.t == 0) continue;
    for (int y = 0; y < h; ++y) allowed[x + y * gt] = 1;
  }
  // A block qualifies if some translate carrying one of its points to
  // residue 0 puts every other residue inside the strip; the block's
  // written form is just one candidate witness.
  int bi = 0;
  for (const auto& b : d.base_blocks) {
    bool ok = false;
    for (const auto& base : b.points) {
      bool all = true;
      for (const auto& p : b.points) {
        int e = mod(p.residue - base.residue, M);
        if (e != 0 && !allowed[e]) {
          all = false;
          break;
        }
      }
      if (all) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      BaseBlock nb = normalize_block(b, M);
      for (const auto& p : nb.points)
        if (p.residue != 0 && !allowed[p.residue])
          rep.add("ele outside strip", "block " + std::to_string(bi),
                  p.residue, 1);
    }
    ++bi;
  }
  return rep;
}

VerificationReport verify_chdm(const Chdm& c) {
  VerificationReport rep;
  const int M = c.w * c.t;
  const int ncol = c.w * (c.t - 1);
  if (static_cast<int>(c.rows.size()) != c.k) {
    rep.add("structural", "row count", static_cast<long long>(c.rows.size()), 1);
    return rep;
  }
  for (const auto& r : c.rows)
    if (static_cast<int>(r.size()) != ncol) {
      rep.add("structural", "column count", static_cast<long long>(r.size()), 1);
      return rep;
    }
  const auto forb = multiples_of_t(M, c.t);
  for (int a = 0; a < c.k; ++a)
    for (int b = 0; b < c.k; ++b) {
      if (a == b) continue;
      std::vector<int> counts(M, 0);
      for (int j = 0; j < ncol; ++j) counts[mod(c.rows[a][j] - c.rows[b][j], M)]++;
      check_exact_cover(rep, "rows " + pair_label(a, b), counts, forb);
    }
  return rep;
}

VerificationReport verify_cdm(const Cdm& c) {
  VerificationReport rep;
  if (static_cast<int>(c.rows.size()) != c.k) {
    rep.add("structural", "row count", static_cast<long long>(c.rows.size()), 1);
    return rep;
  }
  for (const auto& r : c.rows)
    if (static_cast<int>(r.size()) != c.m) {
      rep.add("structural", "column count", static_cast<long long>(r.size()), 1);
      return rep;
    }
  const std::vector<char> forb(c.m, 0);
  for (int a = 0; a < c.k; ++a)
    for (int b = 0; b < c.k; ++b) {
      if (a == b) continue;
      std::vector<int> counts(c.m, 0);
      for (int j = 0; j < c.m; ++j) counts[mod(c.rows[a][j] - c.rows[b][j], c.m)]++;
      check_exact_cover(rep, "rows " + pair_label(a, b), counts, forb);
    }
  return rep;
}

VerificationReport verify_difference_family(const DifferenceFamily& f) {
  VerificationReport rep;
  const int M = f.modulus();
  if (M <= 0) {
    rep.add("structural", "parameters", M, 1);
    return rep;
  }
  std::vector<int> counts(M, 0);
  int bi = 0;
  for (const auto& b : f.blocks) {
    for (int x : b) {
      if (x < 0 || x >= M)
        rep.add("structural", "block " + std::to_string(bi), x, 1);
      for (int y : b)
        if (x != y) counts[mod(x - y, M)]++;
    }
    ++bi;
  }
  check_exact_cover(rep, "family", counts, multiples_of_t(M, f.t));
  if (f.flavor == DfFlavor::Pdf || f.flavor == DfFlavor::Hpdf) {
    const int gt = f.g * f.t;
    std::vector<char> allowed(M, 0);
    for (int x = 0; x <= gt / 2; ++x) {
      if (x % f.t == 0) continue;
      for (int y = 0; y < f.h; ++y) allowed[x + y * gt] = 1;
    }
    // A block qualifies if some translate carrying one element to 0 puts
    // the rest inside the strip (the written form is one witness).
    bi = 0;
    for (const auto& b : f.blocks) {
      if (b.empty()) continue;
      bool ok = false;
      for (int base : b) {
        bool all = true;
        for (int x : b) {
          int e = mod(x - base, M);
          if (e != 0 && !allowed[e]) {
            all = false;
            break;
          }
        }
        if (all) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        int mn = *std::min_element(b.begin(), b.end());
        for (int x : b) {
          int e = mod(x - mn, M);
          if (e != 0 && !allowed[e])
            rep.add("ele outside strip", "block " + std::to_string(bi), e, 1);
        }
      }
      ++bi;
    }
  }
  return rep;
}

VerificationReport verify_mgdd(const Mgdd& d) {
  VerificationReport rep;
  // Pairs of points (g1,h1),(g2,h2) with g1 != g2 and h1 != h2 covered
  // exactly once; no block may repeat a group or a hole.
  auto idx = [&](int g, int h) { return g * d.s + h; };
  const int P = d.n * d.s;
  std::vector<int> counts(P * P, 0);
  int bi = 0;
  for (const auto& b : d.blocks) {
    std::set<int> gs, hs;
    for (const auto& p : b) {
      if (p.group < 0 || p.group >= d.n || p.residue < 0 || p.residue >= d.s)
        rep.add("structural", "block " + std::to_string(bi), p.residue, 1);
      if (!gs.insert(p.group).second)
        rep.add("same-group pair", "block " + std::to_string(bi), p.group, 1);
      if (!hs.insert(p.residue).second)
        rep.add("same-hole pair", "block " + std::to_string(bi), p.residue, 1);
    }
    for (const auto& p : b)
      for (const auto& q : b)
        if (!(p == q)) counts[idx(p.group, p.residue) * P + idx(q.group, q.residue)]++;
    ++bi;
  }
  for (int g1 = 0; g1 < d.n; ++g1)
    for (int h1 = 0; h1 < d.s; ++h1)
      for (int g2 = 0; g2 < d.n; ++g2)
        for (int h2 = 0; h2 < d.s; ++h2) {
          if (g1 == g2 || h1 == h2) continue;
          int c = counts[idx(g1, h1) * P + idx(g2, h2)];
          if (c != 1)
            rep.add(c == 0 ? "missing pair" : "duplicate pair",
                    pair_label(idx(g1, h1), idx(g2, h2)), c, c);
        }
  return rep;
}

VerificationReport verify_scgdd(const Scgdd& d) {
  VerificationReport rep;
  const int M = d.m;
  int bi = 0;
  for (const auto& b : d.base_blocks) {
    std::set<int> gs;
    for (const auto& p : b.points) {
      if (p.group < 0 || p.group >= d.n || p.residue < 0 || p.residue >= M)
        rep.add("structural", "block " + std::to_string(bi), p.residue, 1);
      if (!gs.insert(p.group).second)
        rep.add("same-group pair", "block " + std::to_string(bi), p.group, 1);
    }
    ++bi;
  }
  const std::vector<char> forb(M, 0);
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      if (i == j) continue;
      std::vector<int> counts(M, 0);
      for (const auto& b : d.base_blocks)
        for (const auto& p : b.points) {
          if (p.group != i) continue;
          for (const auto& q : b.points)
            if (q.group == j) counts[mod(p.residue - q.residue, M)]++;
        }
      check_exact_cover(rep, pair_label(i, j), counts, forb);
    }
  return rep;
}

VerificationReport verify_pbd(const Pbd& d) {
  VerificationReport rep;
  std::vector<int> counts(d.v * d.v, 0);
  int bi = 0;
  for (const auto& b : d.blocks) {
    std::set<int> pts;
    for (int x : b) {
      if (x < 0 || x >= d.v)
        rep.add("structural", "block " + std::to_string(bi), x, 1);
      if (!pts.insert(x).second)
        rep.add("repeated point", "block " + std::to_string(bi), x, 1);
    }
    for (int x : b)
      for (int y : b)
        if (x != y) counts[x * d.v + y]++;
    ++bi;
  }
  for (int x = 0; x < d.v; ++x)
    for (int y = 0; y < d.v; ++y) {
      if (x == y) continue;
      int c = counts[x * d.v + y];
      if (c != 1)
        rep.add(c == 0 ? "missing pair" : "duplicate pair", pair_label(x, y), c, c);
    }
  return rep;
}

}  // namespace scd
