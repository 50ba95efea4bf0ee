#include "scd/sequences.hpp"

#include <algorithm>

#include "scd/catalog.hpp"

namespace scd::seq {

namespace {

struct Budget {
  long long left;
  void tick() {
    if (--left < 0) throw Error("BudgetExhausted", "search budget exhausted");
  }
};

}  // namespace

bool verify_skolem(const ExtendedSkolem& s) {
  if (static_cast<int>(s.values.size()) != s.v) return false;
  std::vector<char> seen(2 * s.v + 2, 0);
  for (int i = 1; i <= s.v; ++i) {
    int a = s.values[i - 1];
    int b = a - i;
    if (b < 1 || a > 2 * s.v + 1) return false;
    if (seen[a] || seen[b] || a == b) return false;
    seen[a] = seen[b] = 1;
  }
  for (int x = 1; x <= 2 * s.v + 1; ++x)
    if (seen[x] == (x == s.d)) return false;
  return true;
}

bool verify_pairs(const PairPartition& p) {
  if (static_cast<int>(p.pairs.size()) != p.u) return false;
  std::vector<char> seen(2 * p.u + 2, 0);
  std::vector<char> dseen(p.d + p.u, 0);
  for (auto [x, y] : p.pairs) {
    if (x < 1 || y > 2 * p.u + 1 || x >= y) return false;
    if (seen[x] || seen[y]) return false;
    seen[x] = seen[y] = 1;
    int del = y - x;
    if (del < p.d || del >= p.d + p.u || dseen[del]) return false;
    dseen[del] = 1;
  }
  for (int x = 1; x <= 2 * p.u + 1; ++x)
    if (seen[x] == (x == p.c)) return false;
  return true;
}

bool verify_triples(const TriplePartition& p) {
  if (static_cast<int>(p.triples.size()) != p.u) return false;
  int hi = p.hole ? p.d + 3 * p.u : p.d + 3 * p.u - 1;
  std::vector<char> seen(hi + 1, 0);
  for (auto [a, b, c] : p.triples) {
    if (a + b != c) return false;
    for (int x : {a, b, c}) {
      if (x < p.d || x > hi || seen[x]) return false;
      seen[x] = 1;
    }
  }
  for (int x = p.d; x <= hi; ++x)
    if (seen[x] == (p.hole && x == *p.hole)) return false;
  return true;
}

bool skolem_exists(int v, int d) {
  if (d < 1 || d > 2 * v + 1)
    throw Error("OutOfRange", "d must lie in [1, 2v+1]");
  int vm = v % 4;
  if (d % 2 == 1) return vm == 0 || vm == 1;
  return vm == 2 || vm == 3;
}

namespace {

// Place pairs (x, x+i) for i = v..1 covering {1..2v+1} \ {d}.
bool skolem_rec(int i, std::vector<char>& free, std::vector<int>& values,
                int top, Budget& bud) {
  if (i == 0) return true;
  bud.tick();
  for (int x = 1; x + i <= top; ++x) {
    if (!free[x] || !free[x + i]) continue;
    free[x] = free[x + i] = 0;
    values[i - 1] = x + i;
    if (skolem_rec(i - 1, free, values, top, bud)) return true;
    free[x] = free[x + i] = 1;
  }
  return false;
}

}  // namespace

ExtendedSkolem find_extended_skolem(int v, int d, long long budget) {
  if (!skolem_exists(v, d))
    throw Error("PredicateFail", "no extended Skolem sequence for (v=" +
                                     std::to_string(v) +
                                     ", d=" + std::to_string(d) + ")");
  int top = 2 * v + 1;
  std::vector<char> free(top + 1, 1);
  free[d] = 0;
  std::vector<int> values(v, 0);
  Budget bud{budget};
  if (!skolem_rec(v, free, values, top, bud))
    throw Error("NotFound", "extended Skolem search exhausted (v=" +
                                std::to_string(v) + ", d=" + std::to_string(d) +
                                ")");
  ExtendedSkolem s{v, d, values};
  if (!verify_skolem(s)) throw Error("Internal", "skolem verification failed");
  return s;
}

bool langford_pairs_exists(int u, int d, int c) {
  // Appendix-certified gap cases first.
  if (d == 17 && u >= 36 && u <= 131 && u % 4 == 2 && c == (u - 14) / 2)
    return true;
  if (d == 33 && u >= 68 && u <= 259 && u % 4 == 2 && c == (u - 30) / 2)
    return true;
  if (u < 2 * d - 1) return false;
  if (u >= 2 * d + 2 && u <= 8 * d - 5) return false;
  int um = u % 4, cm = c % 2, dm = d % 2;
  switch (um) {
    case 0: return cm == 1;
    case 1: return cm == dm;
    case 2: return cm == 0;
    default: return cm == (dm + 1) % 2;
  }
}

namespace {

// Exact cover of an interval minus an optional hole by pairs with difference
// set exactly [d, d+count-1].  Branch on the smallest free value; try the
// largest remaining difference first.
struct PairSearch {
  int lo, hi, d, count;
  std::vector<char> free;      // index by value - lo
  std::vector<char> diff_used; // index by delta - d
  std::vector<std::pair<int, int>> out;
  Budget bud;

  bool rec(int placed) {
    if (placed == count) return true;
    bud.tick();
    int x = -1;
    for (int v = 0; v <= hi - lo; ++v)
      if (free[v]) { x = v; break; }
    if (x < 0) return false;
    for (int di = count - 1; di >= 0; --di) {
      if (diff_used[di]) continue;
      int y = x + d + di;
      if (y > hi - lo) continue;
      if (!free[y]) continue;
      free[x] = free[y] = 0;
      diff_used[di] = 1;
      out.emplace_back(lo + x, lo + y);
      if (rec(placed + 1)) return true;
      out.pop_back();
      free[x] = free[y] = 1;
      diff_used[di] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::pair<int, int>>> pair_cover(
    int lo, int hi, std::optional<int> hole, int d, long long budget) {
  int n = hi - lo + 1 - (hole ? 1 : 0);
  if (n < 0 || n % 2 != 0) return std::nullopt;
  PairSearch ps{lo, hi, d, n / 2, {}, {}, {}, Budget{budget}};
  ps.free.assign(hi - lo + 1, 1);
  if (hole) ps.free[*hole - lo] = 0;
  ps.diff_used.assign(n / 2, 0);
  if (!ps.rec(0)) return std::nullopt;
  return ps.out;
}

PairPartition find_langford_pairs(int u, int d, int c, long long budget) {
  if (auto data = catalog::pair_partition(d, u); data && data->c == c) {
    PairPartition p{u, d, c, data->pairs};
    if (!verify_pairs(p)) throw Error("Internal", "catalog pair data invalid");
    return p;
  }
  auto pairs = pair_cover(1, 2 * u + 1, c, d, budget);
  if (!pairs)
    throw Error("NotFound", "no pair partition for (u=" + std::to_string(u) +
                                ", d=" + std::to_string(d) +
                                ", c=" + std::to_string(c) + ")");
  PairPartition p{u, d, c, *pairs};
  if (!verify_pairs(p)) throw Error("Internal", "pair verification failed");
  return p;
}

namespace {

struct TripleSearch {
  int lo, hi;
  std::vector<char> free;
  std::vector<std::array<int, 3>> out;
  Budget bud;

  bool rec(int remaining) {
    if (remaining == 0) return true;
    bud.tick();
    int c = -1;
    for (int v = hi - lo; v >= 0; --v)
      if (free[v]) { c = v; break; }
    if (c < 0) return false;
    free[c] = 0;
    int cv = lo + c;
    for (int a = 0; a < c; ++a) {
      if (!free[a]) continue;
      int av = lo + a;
      int bv = cv - av;
      if (bv <= av || bv > hi || bv < lo) continue;
      if (!free[bv - lo]) continue;
      free[a] = free[bv - lo] = 0;
      out.push_back({av, bv, cv});
      if (rec(remaining - 1)) return true;
      out.pop_back();
      free[a] = free[bv - lo] = 1;
    }
    free[c] = 1;
    return false;
  }
};

}  // namespace

TriplePartition find_triple_partition(int d, int u, std::optional<int> hole,
                                      long long budget) {
  int hi = hole ? d + 3 * u : d + 3 * u - 1;
  TripleSearch ts{d, hi, {}, {}, Budget{budget}};
  ts.free.assign(hi - d + 1, 1);
  if (hole) {
    if (*hole < d || *hole > hi)
      throw Error("PredicateFail", "hole outside interval");
    ts.free[*hole - d] = 0;
  }
  if (!ts.rec(u))
    throw Error("NotFound", "no triple partition for (d=" + std::to_string(d) +
                                ", u=" + std::to_string(u) + ")");
  TriplePartition p{d, u, hole, ts.out};
  if (!verify_triples(p)) throw Error("Internal", "triple verification failed");
  return p;
}

}  // namespace scd::seq
