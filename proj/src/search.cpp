#include "scd/search.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "scd/verify.hpp"

// Backtracking providers.  Branching is deterministic everywhere: the
// lexicographically smallest uncovered slot is filled next, and candidate
// completions are enumerated in ascending order, so identical spec+budget
// always reproduce the same object.

namespace scd::search {

namespace {

struct Budget {
  long long left = kDefaultBudget;
  long long used = 0;

  void tick(const char* what) {
    ++used;
    if (--left < 0) throw Error("BudgetExhausted", what);
  }
};

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Mgdd: return "mgdd";
    case Kind::Scgdd3: return "scgdd3";
    case Kind::Scgdd4: return "scgdd4";
    case Kind::Pbd: return "pbd";
    case Kind::StrictGdd: return "strictgdd";
    case Kind::Chdm: return "chdm";
    case Kind::Schgdd: return "schgdd";
  }
  return "?";
}

// ---- cache ----------------------------------------------------------------

std::optional<std::filesystem::path> cache_dir() {
  const char* env = std::getenv("DF_CACHE_DIR");
  if (!env || !*env) return std::nullopt;
  std::error_code ec;
  std::filesystem::create_directories(env, ec);
  if (ec) return std::nullopt;
  return std::filesystem::path(env);
}

std::optional<json> cache_load(const std::string& key) {
  auto dir = cache_dir();
  if (!dir) return std::nullopt;
  std::ifstream in(*dir / (key + ".json"));
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

void cache_store(const std::string& key, const json& obj) {
  auto dir = cache_dir();
  if (!dir) return;
  {
    std::ofstream out(*dir / (key + ".json"));
    out << obj.dump(1) << "\n";
  }
  json meta = {{"key", key}, {"verified", true}};
  std::ofstream out(*dir / (key + ".meta.json"));
  out << meta.dump(1) << "\n";
}

// ---- slot search: SCGDD / SCHGDD base blocks ------------------------------

// Blocks live on I_n x Z_M; for each group pair i<j every difference
// d in Z_M outside `forbidden` must be realized exactly once as x_i - x_j.
// Block orbits are translation classes, so candidates are normalized with
// residue 0 in their least group; the least group of the block covering the
// smallest open slot (i,j,d) is necessarily i.
struct SlotSearch {
  int n = 0, M = 0, k = 3;
  std::vector<char> forbidden;  // size M
  Budget budget;

  std::vector<char> state;  // 0 open, 1 covered, 2 forbidden
  std::vector<BaseBlock> blocks;

  int pair_index(int i, int j) const {  // i < j
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }
  int slot_of(int i, int xi, int j, int xj) const {  // i < j
    return pair_index(i, j) * M + mod(xi - xj, M);
  }

  void init() {
    state.assign(n * (n - 1) / 2 * M, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int d = 0; d < M; ++d)
          if (forbidden[d]) state[pair_index(i, j) * M + d] = 2;
  }

  bool block_slots(const std::vector<Point>& pts, std::vector<int>& out) const {
    out.clear();
    for (size_t a = 0; a < pts.size(); ++a)
      for (size_t b = a + 1; b < pts.size(); ++b) {
        const Point &p = pts[a], &q = pts[b];
        int s = p.group < q.group ? slot_of(p.group, p.residue, q.group, q.residue)
                                  : slot_of(q.group, q.residue, p.group, p.residue);
        if (state[s] != 0) return false;
        out.push_back(s);
      }
    std::sort(out.begin(), out.end());
    return std::adjacent_find(out.begin(), out.end()) == out.end();
  }

  // Extend pts (which already holds the two forced points) with extra points
  // in groups > base_group, all distinct, in ascending (group,residue) order.
  bool extend(std::vector<Point>& pts, int from, int first_open) {
    if (static_cast<int>(pts.size()) == k) {
      std::vector<int> slots;
      if (!block_slots(pts, slots)) return false;
      for (int s : slots) state[s] = 1;
      blocks.emplace_back(pts);
      if (solve(first_open)) return true;
      blocks.pop_back();
      for (int s : slots) state[s] = 0;
      return false;
    }
    for (int g = from; g < n; ++g) {
      bool used = false;
      for (const auto& p : pts)
        if (p.group == g) used = true;
      if (used) continue;
      for (int x = 0; x < M; ++x) {
        budget.tick("slot search");
        pts.push_back({g, x});
        if (extend(pts, g + 1, first_open)) return true;
        pts.pop_back();
      }
    }
    return false;
  }

  void decode(int s, int& i, int& j, int& d) const {
    int pi = s / M;
    d = s % M;
    i = 0;
    while (pair_index(i, n - 1) < pi) ++i;
    j = pi - pair_index(i, i + 1) + i + 1;
  }

  // Number of completions of the k=3 block forced by slot s; capped at
  // `cap` so most-constrained scanning stays cheap.
  int count3(int s, int cap) const {
    int i, j, d;
    decode(s, i, j, d);
    const int xj = mod(-d, M);
    int cnt = 0;
    for (int g = 0; g < n; ++g) {
      if (g == i || g == j) continue;
      for (int x = 0; x < M; ++x) {
        int s1 = g < i ? slot_of(g, x, i, 0) : slot_of(i, 0, g, x);
        if (state[s1] != 0 || s1 == s) continue;
        int s2 = g < j ? slot_of(g, x, j, xj) : slot_of(j, xj, g, x);
        if (state[s2] != 0 || s2 == s || s2 == s1) continue;
        if (++cnt >= cap) return cnt;
      }
    }
    return cnt;
  }

  bool solve(int scan_from) {
    int P = static_cast<int>(state.size());
    if (k != 3) {
      int s = scan_from;
      while (s < P && state[s] != 0) ++s;
      if (s == P) return true;
      int i, j, d;
      decode(s, i, j, d);
      std::vector<Point> pts{{i, 0}, {j, mod(-d, M)}};
      return extend(pts, i + 1, s);
    }
    // k = 3: branch on the open slot with the fewest completions.
    int best = -1, best_cnt = 0;
    for (int s = 0; s < P; ++s) {
      if (state[s] != 0) continue;
      int c = count3(s, best == -1 ? M * n : best_cnt);
      if (c == 0) return false;
      if (best == -1 || c < best_cnt) {
        best = s;
        best_cnt = c;
        if (c == 1) break;
      }
    }
    if (best == -1) return true;
    int i, j, d;
    decode(best, i, j, d);
    const int xj = mod(-d, M);
    for (int g = 0; g < n; ++g) {
      if (g == i || g == j) continue;
      for (int x = 0; x < M; ++x) {
        budget.tick("slot search");
        std::vector<Point> pts{{i, 0}, {j, xj}, {g, x}};
        std::vector<int> slots;
        if (!block_slots(pts, slots)) continue;
        for (int sl : slots) state[sl] = 1;
        blocks.emplace_back(pts);
        if (solve(0)) return true;
        blocks.pop_back();
        for (int sl : slots) state[sl] = 0;
      }
    }
    return false;
  }
};

std::vector<char> multiples_of(int M, int t) {
  std::vector<char> f(M, 0);
  for (int x = 0; x < M; x += t) f[x] = 1;
  return f;
}

// ---- existence predicates -------------------------------------------------

Existence exists_scgdd3(long long m, long long n) {
  if (n < 3 || m < 1) return Existence::No;
  bool ok = true;
  switch (m % 12) {
    case 1: case 5: case 7: case 11: ok = (n % 6 == 1 || n % 6 == 3); break;
    case 3: case 9: ok = (n % 2 == 1); break;
    case 2: case 10: ok = (n % 12 == 0 || n % 12 == 1 || n % 12 == 4 || n % 12 == 9); break;
    case 4: case 8: ok = (n % 3 == 0 || n % 3 == 1) && n != 3; break;
    case 0: ok = (n != 3); break;
    case 6: ok = (n % 4 == 0 || n % 4 == 1); break;
  }
  return ok ? Existence::Yes : Existence::No;
}

Existence exists_scgdd4(long long m, long long n) {
  if (n < 4 || m < 1) return Existence::No;
  if (m * (n - 1) % 3 != 0 || m * n * (n - 1) % 12 != 0) return Existence::No;
  if (n == 4) return Existence::No;
  if ((m == 2 && n == 10) || (m == 4 && n == 7) || (m == 6 && n == 5))
    return Existence::No;
  if (n == 5 && (m % 36 == 6 || m % 36 == 30) && m >= 30) return Existence::Unknown;
  if (n == 7 && (m % 24 == 4 || m % 24 == 20) && m >= 20) return Existence::Unknown;
  if (n == 10 && (m % 12 == 2 || m % 12 == 10) && m >= 10) return Existence::Unknown;
  return Existence::Yes;
}

Existence exists_strict_gdd3(long long m, long long n) {
  if (m < 1 || n < 4) return Existence::No;
  if (m * (n - 1) % 6 != 0) return Existence::No;
  if (m % 4 == 2 && (n % 4 == 2 || n % 4 == 3)) return Existence::No;
  return Existence::Yes;
}

Existence exists_pbd(long long v, long long kset) {
  if (kset == 3)
    return (v >= 3 && (v % 6 == 1 || v % 6 == 3)) ? Existence::Yes
                                                  : Existence::No;
  if (kset == 34)
    return (v >= 3 && v != 6 && (v % 3 == 0 || v % 3 == 1)) ? Existence::Yes
                                                            : Existence::No;
  if (kset == 345)
    return (v >= 3 && v != 6 && v != 8) ? Existence::Yes : Existence::No;
  if (kset == 4679) {
    static const std::set<long long> bad{10, 12, 15, 18, 19, 24, 27};
    return (v >= 4 && (v % 3 == 0 || v % 3 == 1) && !bad.count(v))
               ? Existence::Yes
               : Existence::No;
  }
  return Existence::Unknown;
}

Existence exists_mgdd3(long long s, long long n) {
  // 3-MGDD of type s^n = 3-HGDD of type (n,1^s).
  if (n < 3 || s < 3) return Existence::No;
  if ((s - 1) * (n - 1) % 2 != 0) return Existence::No;
  if (s * (s - 1) * n * (n - 1) % 3 != 0) return Existence::No;
  return Existence::Yes;
}

Existence exists_schgdd(long long n, long long m, long long t) {
  if (n < 3 || m < 1 || t < 1) return Existence::No;
  if (n == 3) {
    if (t < 3) return Existence::No;
    if ((t - 1) * m % 2 != 0) return Existence::No;
    if (m % 2 == 0 && t == 3) return Existence::No;
    return Existence::Yes;
  }
  if (t % 2 == 1) {
    if (t < 3 || (t - 1) * n * (n - 1) * m % 6 != 0) return Existence::No;
    if (n == 6 && m == 1 && t == 3) return Existence::No;
    if (n == 6 && (m % 6 == 1 || m % 6 == 5) && (t % 18 == 3 || t % 18 == 15))
      return Existence::Unknown;
    if (n == 8 && (m % 12 == 2 || m % 12 == 10) && t % 12 == 7)
      return Existence::Unknown;
    return Existence::Yes;
  }
  // Even t with n >= 4: only necessary conditions are known here.
  if ((t - 1) * (n - 1) * m % 2 != 0) return Existence::No;
  if ((t - 1) * n * (n - 1) * m % 6 != 0) return Existence::No;
  return Existence::Unknown;
}

long long param(const SearchSpec& s, const std::string& name) {
  auto it = s.params.find(name);
  if (it == s.params.end())
    throw Error("BadSpec", "missing parameter '" + name + "'");
  return it->second;
}

void require_exists(const SearchSpec& spec) {
  if (ingredient_exists(spec) == Existence::No)
    throw Error("KnownNonexistent", "no such object: " + spec.key());
}

std::vector<int> kset_digits(long long kset) {
  std::vector<int> K;
  std::string s = std::to_string(kset);
  for (char c : s) K.push_back(c - '0');
  std::sort(K.begin(), K.end());
  return K;
}

long long kset_code(const std::vector<int>& K) {
  std::vector<int> s(K);
  std::sort(s.begin(), s.end());
  long long code = 0;
  for (int k : s) code = code * 10 + k;
  return code;
}

// ---- local JSON for auxiliary types ---------------------------------------

json mgdd_to_json(const Mgdd& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    json jb = json::array();
    for (const auto& p : b) jb.push_back({p.group, p.residue});
    blocks.push_back(jb);
  }
  return {{"kind", "mgdd"}, {"n", d.n}, {"s", d.s}, {"blocks", blocks}};
}

Mgdd mgdd_from_json(const json& j) {
  Mgdd d;
  d.n = j.at("n").get<int>();
  d.s = j.at("s").get<int>();
  for (const auto& jb : j.at("blocks")) {
    std::vector<Point> b;
    for (const auto& jp : jb) b.push_back({jp.at(0).get<int>(), jp.at(1).get<int>()});
    d.blocks.push_back(std::move(b));
  }
  return d;
}

json scgdd_to_json(const Scgdd& d) {
  json blocks = json::array();
  for (const auto& b : d.base_blocks) {
    json jb = json::array();
    for (const auto& p : b.points) jb.push_back({p.group, p.residue});
    blocks.push_back(jb);
  }
  return {{"kind", "scgdd"}, {"n", d.n}, {"m", d.m}, {"blocks", blocks}};
}

Scgdd scgdd_from_json(const json& j) {
  Scgdd d;
  d.n = j.at("n").get<int>();
  d.m = j.at("m").get<int>();
  for (const auto& jb : j.at("blocks")) {
    std::vector<Point> b;
    for (const auto& jp : jb) b.push_back({jp.at(0).get<int>(), jp.at(1).get<int>()});
    d.base_blocks.emplace_back(std::move(b));
  }
  return d;
}

json pbd_to_json(const Pbd& d) {
  return {{"kind", "pbd"}, {"v", d.v}, {"blocks", d.blocks}};
}

Pbd pbd_from_json(const json& j) {
  Pbd d;
  d.v = j.at("v").get<int>();
  d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  return d;
}

// ---- MGDD search ----------------------------------------------------------

struct MgddSearch {
  int n = 0, s = 0;
  Budget budget;
  std::vector<char> covered;  // pair id p1*N+p2, p1<p2
  std::vector<std::vector<Point>> blocks;
  int N = 0;

  int id(const Point& p) const { return p.group * s + p.residue; }
  bool valid_pair(const Point& a, const Point& b) const {
    return a.group != b.group && a.residue != b.residue;
  }

  bool solve(int scan_from) {
    int sidx = scan_from;
    while (sidx < N * N) {
      int p1 = sidx / N, p2 = sidx % N;
      if (p2 > p1) {
        Point a{p1 / s, p1 % s}, b{p2 / s, p2 % s};
        if (valid_pair(a, b) && !covered[sidx]) break;
      }
      ++sidx;
    }
    if (sidx >= N * N) return true;
    Point a{sidx / N / s, sidx / N % s}, b{sidx % N / s, sidx % N % s};
    for (int c = 0; c < N; ++c) {
      budget.tick("mgdd search");
      Point p{c / s, c % s};
      if (!valid_pair(a, p) || !valid_pair(b, p)) continue;
      int e1 = std::min(id(a), c) * N + std::max(id(a), c);
      int e2 = std::min(id(b), c) * N + std::max(id(b), c);
      if (covered[e1] || covered[e2]) continue;
      covered[sidx] = covered[e1] = covered[e2] = 1;
      blocks.push_back({a, b, p});
      if (solve(sidx)) return true;
      blocks.pop_back();
      covered[sidx] = covered[e1] = covered[e2] = 0;
    }
    return false;
  }
};

// ---- difference-family search ---------------------------------------------

// Covers Z_M \ {multiples of t} exactly once by block differences; branches
// on the smallest uncovered folded value.  A block covering folded value f
// has a unique ordered pair at difference f, so the translate putting that
// pair at (0,f) is a canonical representative.
struct DfSearch {
  int M = 0, t = 0;
  std::vector<int> K;
  std::vector<char> allowed_elem;  // strip filter (empty = no constraint)
  Budget budget;

  std::vector<char> covered;  // folded values 1..M/2
  std::vector<std::vector<int>> blocks;
  std::vector<char> reachable;  // open-count values a block multiset can hit
  int open_cnt = 0;
  std::vector<int> strip_elems;  // allowed elements, ascending
  std::vector<char> in_strip0;   // strip membership including 0

  int fold(int d) const { return std::min(d, M - d); }

  bool strip_ok(const std::vector<int>& b) const {
    if (allowed_elem.empty()) return true;
    for (int base : b) {
      bool all = true;
      for (int x : b) {
        int e = mod(x - base, M);
        if (e != 0 && !allowed_elem[e]) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }

  bool block_folds(const std::vector<int>& b, std::vector<int>& out) const {
    out.clear();
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) {
        int d = fold(mod(b[i] - b[j], M));
        if (d == 0 || d % t == 0) return false;
        if (2 * d == M) return false;  // would cover M/2 twice
        if (covered[d]) return false;
        out.push_back(d);
      }
    std::sort(out.begin(), out.end());
    return std::adjacent_find(out.begin(), out.end()) == out.end();
  }

  bool extend(std::vector<int>& b, int size, int next_elem, int first_open) {
    if (static_cast<int>(b.size()) == size) {
      if (!strip_ok(b)) return false;
      blocks.push_back(b);
      if (solve(first_open)) return true;
      blocks.pop_back();
      return false;
    }
    for (int x = next_elem; x < M; ++x) {
      budget.tick("df search");
      // Check the new differences as soon as the element is considered.
      int nd[8];
      int cnt = 0;
      bool ok = true;
      for (int y : b) {
        int d = fold(mod(x - y, M));
        if (d == 0 || d % t == 0 || 2 * d == M || covered[d]) {
          ok = false;
          break;
        }
        bool dup = false;
        for (int i = 0; i < cnt; ++i)
          if (nd[i] == d) dup = true;
        if (dup) {
          ok = false;
          break;
        }
        nd[cnt++] = d;
      }
      if (!ok) continue;
      for (int i = 0; i < cnt; ++i) covered[nd[i]] = 1;
      open_cnt -= cnt;
      b.push_back(x);
      if (extend(b, size, x + 1, first_open)) return true;
      b.pop_back();
      open_cnt += cnt;
      for (int i = 0; i < cnt; ++i) covered[nd[i]] = 0;
    }
    return false;
  }

  bool open(int f) const { return f % t != 0 && 2 * f != M && !covered[f]; }

  // Third elements completing a block {0,f,x}; every triple covering folded
  // value f has exactly one translate of this form.
  int count3(int f, int cap, std::vector<int>* out) const {
    int c = 0;
    for (int x = 1; x < M && c < cap; ++x) {
      if (x == f) continue;
      int d1 = fold(x), d2 = fold(mod(x - f, M));
      if (d1 == f || d2 == f || d1 == d2) continue;
      if (!open(d1) || !open(d2)) continue;
      if (!allowed_elem.empty() && !strip_ok({0, f, x})) continue;
      ++c;
      if (out) out->push_back(x);
    }
    return c;
  }

  bool solve3() {
    int half = M / 2, best_f = 0, best_c = INT_MAX;
    for (int f = 1; f <= half; ++f) {
      if (!open(f)) continue;
      int c = count3(f, best_c, nullptr);
      if (c == 0) return false;
      if (c < best_c) {
        best_c = c;
        best_f = f;
        if (c == 1) break;
      }
    }
    if (best_f == 0) return true;
    std::vector<int> cand;
    count3(best_f, INT_MAX, &cand);
    for (int x : cand) {
      budget.tick("df search");
      int d1 = fold(x), d2 = fold(mod(x - best_f, M));
      covered[best_f] = covered[d1] = covered[d2] = 1;
      blocks.push_back({0, best_f, x});
      if (solve3()) return true;
      blocks.pop_back();
      covered[best_f] = covered[d1] = covered[d2] = 0;
    }
    return false;
  }

  // Strip-normal search: every PDF/h-PDF block has a translate containing 0
  // with all other elements inside the ele strip, so branching can stay
  // inside that (much smaller) domain.
  bool strip_extend(std::vector<int>& b, int size, size_t from) {
    if (static_cast<int>(b.size()) == size) {
      blocks.push_back(b);
      if (solve(0)) return true;
      blocks.pop_back();
      return false;
    }
    for (size_t i = from; i < strip_elems.size(); ++i) {
      int x = strip_elems[i];
      if (std::find(b.begin(), b.end(), x) != b.end()) continue;
      budget.tick("df search");
      int nd[8];
      int cnt = 0;
      bool ok = true;
      for (int y : b) {
        int d = fold(mod(x - y, M));
        if (d == 0 || d % t == 0 || 2 * d == M || covered[d]) {
          ok = false;
          break;
        }
        bool dup = false;
        for (int c = 0; c < cnt; ++c)
          if (nd[c] == d) dup = true;
        if (dup) {
          ok = false;
          break;
        }
        nd[cnt++] = d;
      }
      if (!ok) continue;
      for (int c = 0; c < cnt; ++c) covered[nd[c]] = 1;
      open_cnt -= cnt;
      b.push_back(x);
      bool win = strip_extend(b, size, i + 1);
      b.pop_back();
      if (win) return true;
      open_cnt += cnt;
      for (int c = 0; c < cnt; ++c) covered[nd[c]] = 0;
    }
    return false;
  }

  bool strip_solve() {
    if (!reachable.empty() && !reachable[open_cnt]) return false;
    int half = M / 2;
    int f = half;
    while (f >= 1 && (f % t == 0 || 2 * f == M || covered[f])) --f;
    if (f < 1) return true;
    // Anchor the pair realizing folded value f: (p, p+f) with both ends in
    // the strip (0 counts); the block also always contains 0.
    for (int p = 0; p < M; ++p) {
      if (!in_strip0[p]) continue;
      int q = (p + f) % M;
      if (q == p || !in_strip0[q]) continue;
      std::vector<int> b{0};
      if (p != 0) b.push_back(p);
      if (q != 0) b.push_back(q);
      int nd[8];
      int cnt = 0;
      bool ok = true;
      for (size_t i = 0; i < b.size() && ok; ++i)
        for (size_t j = i + 1; j < b.size() && ok; ++j) {
          int d = fold(mod(b[i] - b[j], M));
          if (d == 0 || d % t == 0 || 2 * d == M || covered[d]) ok = false;
          for (int c = 0; c < cnt; ++c)
            if (nd[c] == d) ok = false;
          if (ok) nd[cnt++] = d;
        }
      if (!ok) continue;
      for (auto it = K.rbegin(); it != K.rend(); ++it) {
        int size = *it;
        if (size < static_cast<int>(b.size())) continue;
        for (int c = 0; c < cnt; ++c) covered[nd[c]] = 1;
        open_cnt -= cnt;
        std::vector<int> bb = b;
        bool win = strip_extend(bb, size, 0);
        open_cnt += cnt;
        for (int c = 0; c < cnt; ++c) covered[nd[c]] = 0;
        if (win) return true;
      }
    }
    return false;
  }

  bool solve(int scan_from) {
    if (!allowed_elem.empty() && K != std::vector<int>{3}) return strip_solve();
    if (K == std::vector<int>{3}) return solve3();
    if (!reachable.empty() && !reachable[open_cnt]) return false;
    // Branch on the largest uncovered folded value: large differences have
    // the fewest placements, so fixing them first prunes hardest.
    int half = M / 2;
    int f = half;
    while (f >= 1 && (f % t == 0 || 2 * f == M || covered[f])) --f;
    if (f < 1) return true;
    for (auto it = K.rbegin(); it != K.rend(); ++it) {
      int size = *it;
      if (size == 2) continue;
      std::vector<int> b{0, f};
      covered[f] = 1;
      --open_cnt;
      if (extend(b, size, 1, scan_from)) return true;
      ++open_cnt;
      covered[f] = 0;
    }
    return false;
  }
};

// ---- PBD search -----------------------------------------------------------

struct PbdSearch {
  int v = 0;
  std::vector<int> K;  // descending try-order
  Budget budget;
  std::vector<char> covered;  // p*v+q, p<q
  std::vector<std::vector<int>> blocks;

  int pid(int x, int y) const { return std::min(x, y) * v + std::max(x, y); }

  // Third points completing the anchor pair into an open triangle.
  int count3(int p, int q, int cap) const {
    int c = 0;
    for (int x = 0; x < v && c < cap; ++x) {
      if (x == p || x == q) continue;
      if (!covered[pid(p, x)] && !covered[pid(q, x)]) ++c;
    }
    return c;
  }

  bool extend(std::vector<int>& b, int size, int next_elem) {
    if (static_cast<int>(b.size()) == size) {
      blocks.push_back(b);
      if (solve(0)) return true;
      blocks.pop_back();
      return false;
    }
    for (int x = next_elem; x < v; ++x) {
      budget.tick("pbd search");
      if (x == b[0] || x == b[1]) continue;
      bool ok = true;
      for (int y : b)
        if (covered[pid(x, y)]) ok = false;
      if (!ok) continue;
      for (int y : b) covered[pid(x, y)] = 1;
      b.push_back(x);
      bool win = extend(b, size, x + 1);
      b.pop_back();
      if (win) return true;
      for (int y : b) covered[pid(x, y)] = 0;
    }
    return false;
  }

  bool solve(int) {
    // Pick the open pair with the fewest triangle completions; any block
    // covering a pair supplies such a completion, so zero means dead end.
    int bp = -1, bq = -1, bc = INT_MAX;
    for (int p = 0; p < v && bc > 1; ++p)
      for (int q = p + 1; q < v; ++q) {
        if (covered[p * v + q]) continue;
        int c = count3(p, q, bc);
        if (c == 0) return false;
        if (c < bc) {
          bc = c;
          bp = p;
          bq = q;
          if (bc == 1) break;
        }
      }
    if (bp < 0) return true;
    for (int size : K) {
      std::vector<int> b{bp, bq};
      covered[bp * v + bq] = 1;
      if (extend(b, size, 0)) return true;
      covered[bp * v + bq] = 0;
    }
    return false;
  }
};

// Cyclic Steiner triple system via difference triples (v = 1,3 mod 6,
// v != 9); AG(2,3) hard-coded for v = 9.
Pbd pbd_triples(int v, long long budget_nodes) {
  Pbd d;
  d.v = v;
  if (v == 3) {
    d.blocks = {{0, 1, 2}};
    return d;
  }
  if (v == 9) {
    d.blocks = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7},
                {2, 5, 8}, {0, 4, 8}, {1, 5, 6}, {2, 3, 7}, {0, 5, 7},
                {1, 3, 8}, {2, 4, 6}};
    return d;
  }
  if (v % 6 == 3) {
    // Bose: points Z_u x {0,1,2}, u = v/3 odd.
    int u = v / 3;
    auto pid = [&](int x, int i) { return i * u + x; };
    int inv2 = (u + 1) / 2;
    for (int x = 0; x < u; ++x)
      d.blocks.push_back({pid(x, 0), pid(x, 1), pid(x, 2)});
    for (int i = 0; i < 3; ++i)
      for (int x = 0; x < u; ++x)
        for (int y = x + 1; y < u; ++y)
          d.blocks.push_back({pid(x, i), pid(y, i),
                              pid(int(1LL * (x + y) * inv2 % u), (i + 1) % 3)});
    for (auto& b : d.blocks) std::sort(b.begin(), b.end());
    return d;
  }
  // v = 1 mod 6: cyclic STS from a difference-triple cover of Z_v \ {0}.
  DfSearch ds;
  ds.M = v;
  ds.t = v;  // forbidden multiples of v = {0}
  ds.K = {3};
  ds.budget.left = budget_nodes;
  ds.covered.assign(v / 2 + 1, 0);
  if (!ds.solve(1))
    throw Error("NotFound", "no cyclic STS(" + std::to_string(v) + ")");
  for (const auto& b : ds.blocks)
    for (int s = 0; s < v; ++s) {
      std::vector<int> tb;
      for (int x : b) tb.push_back(mod(x + s, v));
      std::sort(tb.begin(), tb.end());
      d.blocks.push_back(tb);
    }
  // Each block orbit of length v appears once per starting translate; the
  // cover uses each unordered block exactly once already.
  std::sort(d.blocks.begin(), d.blocks.end());
  d.blocks.erase(std::unique(d.blocks.begin(), d.blocks.end()),
                 d.blocks.end());
  return d;
}

void require_pass(const VerificationReport& rep, const std::string& what) {
  if (!rep.pass)
    throw Error("VerificationFailed", what + ": " + rep.summary());
}

}  // namespace

std::string SearchSpec::key() const {
  std::ostringstream os;
  os << kind_name(kind);
  for (const auto& [k, v] : params) os << "-" << k << v;
  return os.str();
}

Existence ingredient_exists(const SearchSpec& spec) {
  switch (spec.kind) {
    case Kind::Mgdd:
      return exists_mgdd3(param(spec, "s"), param(spec, "n"));
    case Kind::Scgdd3:
      return exists_scgdd3(param(spec, "m"), param(spec, "n"));
    case Kind::Scgdd4:
      return exists_scgdd4(param(spec, "m"), param(spec, "n"));
    case Kind::Pbd:
      return exists_pbd(param(spec, "v"), param(spec, "K"));
    case Kind::StrictGdd: {
      auto it = spec.params.find("K");
      long long kc = it == spec.params.end() ? 3 : it->second;
      if (kc == 3)
        return exists_strict_gdd3(param(spec, "m"), param(spec, "n"));
      return Existence::Unknown;
    }
    case Kind::Chdm:
      return exists_schgdd(3, param(spec, "w"), param(spec, "t"));
    case Kind::Schgdd:
      return exists_schgdd(param(spec, "n"), param(spec, "m"),
                           param(spec, "t"));
  }
  return Existence::Unknown;
}

Mgdd find_mgdd(int s, int n, long long budget) {
  SearchSpec spec{Kind::Mgdd, {{"n", n}, {"s", s}}, budget};
  require_exists(spec);
  if (auto j = cache_load(spec.key())) {
    Mgdd d = mgdd_from_json(*j);
    if (verify_mgdd(d).pass) return d;
  }
  MgddSearch ms;
  ms.n = n;
  ms.s = s;
  ms.N = n * s;
  ms.budget.left = budget;
  ms.covered.assign(ms.N * ms.N, 0);
  if (!ms.solve(0))
    throw Error("NotFound", "mgdd search exhausted: " + spec.key());
  Mgdd d;
  d.n = n;
  d.s = s;
  d.blocks = ms.blocks;
  require_pass(verify_mgdd(d), spec.key());
  cache_store(spec.key(), mgdd_to_json(d));
  return d;
}

Scgdd find_scgdd(int k, int m, int n, long long budget) {
  SearchSpec spec{k == 3 ? Kind::Scgdd3 : Kind::Scgdd4,
                  {{"m", m}, {"n", n}}, budget};
  require_exists(spec);
  if (auto j = cache_load(spec.key())) {
    Scgdd d = scgdd_from_json(*j);
    if (verify_scgdd(d).pass) return d;
  }
  SlotSearch ss;
  ss.n = n;
  ss.M = m;
  ss.k = k;
  ss.forbidden.assign(m, 0);
  ss.budget.left = budget;
  ss.init();
  if (!ss.solve(0))
    throw Error("NotFound", "scgdd search exhausted: " + spec.key());
  Scgdd d;
  d.n = n;
  d.m = m;
  d.base_blocks = ss.blocks;
  require_pass(verify_scgdd(d), spec.key());
  cache_store(spec.key(), scgdd_to_json(d));
  return d;
}

Pbd find_pbd(int v, const std::vector<int>& K, long long budget) {
  SearchSpec spec{Kind::Pbd, {{"K", kset_code(K)}, {"v", v}}, budget};
  require_exists(spec);
  if (auto j = cache_load(spec.key())) {
    Pbd d = pbd_from_json(*j);
    if (verify_pbd(d).pass) return d;
  }
  Pbd d;
  bool has3 = std::count(K.begin(), K.end(), 3) > 0;
  if (has3 && v >= 3 && (v % 6 == 1 || v % 6 == 3)) {
    d = pbd_triples(v, budget);
  } else {
    PbdSearch ps;
    ps.v = v;
    ps.K = K;
    std::sort(ps.K.rbegin(), ps.K.rend());
    ps.budget.left = budget;
    ps.covered.assign(v * v, 0);
    if (!ps.solve(0))
      throw Error("NotFound", "pbd search exhausted: " + spec.key());
    d.v = v;
    d.blocks = ps.blocks;
  }
  require_pass(verify_pbd(d), spec.key());
  cache_store(spec.key(), pbd_to_json(d));
  return d;
}

DifferenceFamily find_df(int g, int t, int h, DfFlavor flavor,
                         const std::vector<int>& K, long long budget) {
  std::map<std::string, long long> params{
      {"K", kset_code(K)}, {"g", g}, {"h", h}, {"t", t},
      {"f", static_cast<long long>(flavor)}};
  SearchSpec spec{Kind::StrictGdd, params, budget};
  if (auto j = cache_load(spec.key())) {
    DifferenceFamily f = df_from_json(*j);
    if (f.g == g && f.t == t && f.h == h && f.flavor == flavor &&
        verify_difference_family(f).pass)
      return f;
  }
  DfSearch ds;
  ds.M = h * g * t;
  ds.t = t;
  ds.K = K;
  std::sort(ds.K.begin(), ds.K.end());
  ds.budget.left = budget;
  ds.covered.assign(ds.M / 2 + 1, 0);
  if (flavor == DfFlavor::Pdf || flavor == DfFlavor::Hpdf) {
    const int gt = g * t;
    ds.allowed_elem.assign(ds.M, 0);
    for (int x = 0; x <= gt / 2; ++x) {
      if (x % t == 0) continue;
      for (int y = 0; y < h; ++y) ds.allowed_elem[x + y * gt] = 1;
    }
    ds.in_strip0.assign(ds.M, 0);
    ds.in_strip0[0] = 1;
    for (int x = 0; x < ds.M; ++x)
      if (ds.allowed_elem[x]) {
        ds.in_strip0[x] = 1;
        ds.strip_elems.push_back(x);
      }
  }
  for (int f = 1; f <= ds.M / 2; ++f)
    if (ds.open(f)) ++ds.open_cnt;
  ds.reachable.assign(ds.open_cnt + 1, 0);
  ds.reachable[0] = 1;
  for (int u = 1; u <= ds.open_cnt; ++u)
    for (int k : ds.K)
      if (int w = k * (k - 1) / 2; u >= w && ds.reachable[u - w])
        ds.reachable[u] = 1;
  if (!ds.solve(1))
    throw Error("NotFound", "difference-family search exhausted: " + spec.key());
  if (!ds.allowed_elem.empty()) {
    // Store each block in its strip translate so downstream reshaping
    // (e.g. reading residues as integers) sees the witness representative.
    for (auto& b : ds.blocks) {
      for (int base : b) {
        bool all = true;
        for (int x : b)
          if (int e = mod(x - base, ds.M); e != 0 && !ds.allowed_elem[e])
            all = false;
        if (all) {
          for (int& x : b) x = mod(x - base, ds.M);
          std::sort(b.begin(), b.end());
          break;
        }
      }
    }
  }
  DifferenceFamily f;
  f.g = g;
  f.t = t;
  f.h = h;
  f.flavor = flavor;
  f.blocks = ds.blocks;
  f.recipe = RecipeNode("search:df", {{"g", g}, {"t", t}, {"h", h},
                                      {"nodes", ds.budget.used}});
  require_pass(verify_difference_family(f), spec.key());
  cache_store(spec.key(), to_json(f));
  return f;
}

DifferenceFamily find_strict_gdd(int m, int t, const std::vector<int>& K,
                                 long long budget) {
  if (K == std::vector<int>{3}) {
    SearchSpec spec{Kind::StrictGdd, {{"m", m}, {"n", t}}, budget};
    require_exists(spec);
    // Peel an odd prime factor: a type (pm')^t strict GDD is the product of
    // a type m'^t one with the p columns (0, j, 2j) of an odd-order CDM,
    // which keeps the big cases out of raw search.
    for (int p = 3; p * p <= m || p <= m; p += 2) {
      if (m % p != 0) continue;
      bool prime = true;
      for (int q = 3; q * q <= p; q += 2)
        if (p % q == 0) prime = false;
      if (!prime) continue;
      int m0 = m / p;
      if (m0 < 1) break;
      SearchSpec sub{Kind::StrictGdd, {{"m", m0}, {"n", t}}, budget};
      if (m0 > 1 && ingredient_exists(sub) != Existence::Yes) continue;
      DifferenceFamily base;
      try {
        base = find_strict_gdd(m0, t, K, budget);
      } catch (const Error&) {
        continue;
      }
      DifferenceFamily out;
      out.g = m;
      out.t = t;
      out.h = 1;
      out.flavor = DfFlavor::Cdf;
      const int step = m0 * t, M = m * t;
      for (const auto& b : base.blocks) {
        for (int j = 0; j < p; ++j) {
          std::vector<int> nb;
          for (size_t i = 0; i < b.size(); ++i)
            nb.push_back(mod(b[i] + 1LL * step * (static_cast<int>(i) * j % p),
                             M));
          std::sort(nb.begin(), nb.end());
          out.blocks.push_back(std::move(nb));
        }
      }
      out.recipe = RecipeNode("strict_gdd_product", {{"m0", m0}, {"p", p}},
                              {base.recipe});
      if (verify_difference_family(out).pass) return out;
    }
  }
  return find_df(m, t, 1, DfFlavor::Cdf, K, budget);
}

SchgddDesign find_schgdd(int n, int m, int t, long long budget) {
  SearchSpec spec{Kind::Schgdd, {{"m", m}, {"n", n}, {"t", t}}, budget};
  require_exists(spec);
  if (auto j = cache_load(spec.key())) {
    SchgddDesign d = schgdd_from_json(*j);
    if (d.n == n && d.m == m && d.t == t && verify_schgdd(d).pass) return d;
  }
  SlotSearch ss;
  ss.n = n;
  ss.M = m * t;
  ss.k = 3;
  ss.forbidden = multiples_of(m * t, t);
  ss.budget.left = budget;
  ss.init();
  if (!ss.solve(0))
    throw Error("NotFound", "schgdd search exhausted: " + spec.key());
  SchgddDesign d;
  d.n = n;
  d.m = m;
  d.t = t;
  d.base_blocks = ss.blocks;
  d.recipe = RecipeNode("search:schgdd", {{"n", n}, {"m", m}, {"t", t},
                                          {"nodes", ss.budget.used}});
  require_pass(verify_schgdd(d), spec.key());
  cache_store(spec.key(), to_json(d));
  return d;
}

Chdm find_chdm(int w, int t, long long budget) {
  SchgddDesign d = find_schgdd(3, w, t, budget);
  Chdm c = schgdd_to_chdm(d);
  require_pass(verify_chdm(c), "chdm from searched (3," +
                                   std::to_string(w) + "^" +
                                   std::to_string(t) + ")");
  return c;
}

ExhaustOutcome exhaust_schgdd(int n, int m, int t, long long budget) {
  SlotSearch ss;
  ss.n = n;
  ss.M = m * t;
  ss.k = 3;
  ss.forbidden = multiples_of(m * t, t);
  ss.budget.left = budget;
  ss.init();
  try {
    return ss.solve(0) ? ExhaustOutcome::Found : ExhaustOutcome::Refuted;
  } catch (const Error& e) {
    if (e.code == "BudgetExhausted") return ExhaustOutcome::Exhausted;
    throw;
  }
}

json find_ingredient(const SearchSpec& spec) {
  switch (spec.kind) {
    case Kind::Mgdd:
      return mgdd_to_json(find_mgdd(static_cast<int>(param(spec, "s")),
                                    static_cast<int>(param(spec, "n")),
                                    spec.budget));
    case Kind::Scgdd3:
      return scgdd_to_json(find_scgdd(3, static_cast<int>(param(spec, "m")),
                                      static_cast<int>(param(spec, "n")),
                                      spec.budget));
    case Kind::Scgdd4:
      return scgdd_to_json(find_scgdd(4, static_cast<int>(param(spec, "m")),
                                      static_cast<int>(param(spec, "n")),
                                      spec.budget));
    case Kind::Pbd:
      return pbd_to_json(find_pbd(static_cast<int>(param(spec, "v")),
                                  kset_digits(param(spec, "K")),
                                  spec.budget));
    case Kind::StrictGdd: {
      auto it = spec.params.find("K");
      std::vector<int> K =
          it == spec.params.end() ? std::vector<int>{3} : kset_digits(it->second);
      return to_json(find_strict_gdd(static_cast<int>(param(spec, "m")),
                                     static_cast<int>(param(spec, "n")), K,
                                     spec.budget));
    }
    case Kind::Chdm:
      return to_json(find_chdm(static_cast<int>(param(spec, "w")),
                               static_cast<int>(param(spec, "t")),
                               spec.budget));
    case Kind::Schgdd:
      return to_json(find_schgdd(static_cast<int>(param(spec, "n")),
                                 static_cast<int>(param(spec, "m")),
                                 static_cast<int>(param(spec, "t")),
                                 spec.budget));
  }
  throw Error("BadSpec", "unsupported kind");
}

}  // namespace scd::search
