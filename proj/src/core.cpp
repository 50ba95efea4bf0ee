#include "scd/core.hpp"

#include <algorithm>

namespace scd {

std::string to_string(DfFlavor f) {
  switch (f) {
    case DfFlavor::Cdf: return "cdf";
    case DfFlavor::Pdf: return "pdf";
    case DfFlavor::Hpdf: return "hpdf";
  }
  return "cdf";
}

DfFlavor df_flavor_from_string(const std::string& s) {
  if (s == "cdf") return DfFlavor::Cdf;
  if (s == "pdf") return DfFlavor::Pdf;
  if (s == "hpdf") return DfFlavor::Hpdf;
  throw Error("BadFlavor", "unknown flavor '" + s + "'");
}

void BaseBlock::canonicalize() { std::sort(points.begin(), points.end()); }

void SchgddDesign::canonicalize() {
  for (auto& b : base_blocks) b.canonicalize();
  std::sort(base_blocks.begin(), base_blocks.end());
}

std::vector<int> delta_pair_multiset(const SchgddDesign& d, int i, int j) {
  const int M = d.modulus();
  std::vector<int> out;
  for (const auto& b : d.base_blocks) {
    for (const auto& p : b.points) {
      if (p.group != i) continue;
      for (const auto& q : b.points) {
        if (q.group != j || p == q) continue;
        out.push_back(mod(p.residue - q.residue, M));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BaseBlock> develop(const SchgddDesign& d) {
  const int M = d.modulus();
  std::vector<BaseBlock> out;
  out.reserve(d.base_blocks.size() * M);
  for (const auto& b : d.base_blocks) {
    for (int c = 0; c < M; ++c) {
      BaseBlock tb;
      tb.points.reserve(b.points.size());
      for (const auto& p : b.points)
        tb.points.push_back({p.group, mod(p.residue + c, M)});
      tb.canonicalize();
      out.push_back(std::move(tb));
    }
  }
  return out;
}

BaseBlock normalize_block(const BaseBlock& b, int modulus) {
  if (b.points.empty()) return b;
  int d = b.points[0].residue;
  for (const auto& p : b.points) d = std::min(d, p.residue);
  BaseBlock out;
  out.points.reserve(b.points.size());
  for (const auto& p : b.points)
    out.points.push_back({p.group, mod(p.residue - d, modulus)});
  return out;
}

long long expected_base_block_count(int n, int m, int t) {
  long long num = 1LL * (t - 1) * n * (n - 1) * m;
  if (num % 6 != 0)
    throw Error("NotDivisible", "(t-1)n(n-1)m = " + std::to_string(num) +
                                    " is not divisible by 6");
  return num / 6;
}

SchgddDesign chdm_to_schgdd(const Chdm& c) {
  SchgddDesign d;
  d.n = c.k;
  d.m = c.w;
  d.t = c.t;
  d.k = c.k;
  d.recipe = RecipeNode("convert_chdm_schgdd", {}, {c.recipe});
  for (int j = 0; j < c.cols(); ++j) {
    BaseBlock b;
    for (int i = 0; i < c.k; ++i) b.points.push_back({i, c.rows[i][j]});
    b.canonicalize();
    d.base_blocks.push_back(std::move(b));
  }
  d.canonicalize();
  return d;
}

Chdm schgdd_to_chdm(const SchgddDesign& d) {
  if (d.n != d.k)
    throw Error("ShapeMismatch", "CHDM form needs n = k, got n=" +
                                     std::to_string(d.n) +
                                     " k=" + std::to_string(d.k));
  Chdm c;
  c.k = d.k;
  c.w = d.m;
  c.t = d.t;
  c.recipe = RecipeNode("convert_schgdd_chdm", {}, {d.recipe});
  c.rows.assign(c.k, {});
  const int M = d.modulus();
  // Each base block touches every group exactly once when n = k; translate
  // so the group-0 entry is the residue as stored (canonical column).
  std::vector<std::vector<int>> cols;
  for (const auto& b : d.base_blocks) {
    std::vector<int> col(c.k, -1);
    for (const auto& p : b.points) {
      if (p.group < 0 || p.group >= c.k || col[p.group] != -1)
        throw Error("ShapeMismatch", "block does not hit each group once");
      col[p.group] = p.residue;
    }
    int shift = col[0];
    for (auto& x : col) x = mod(x - shift, M);
    cols.push_back(std::move(col));
  }
  std::sort(cols.begin(), cols.end());
  for (const auto& col : cols)
    for (int i = 0; i < c.k; ++i) c.rows[i].push_back(col[i]);
  return c;
}

json to_json(const RecipeNode& r) {
  json j;
  j["rule"] = r.rule;
  j["params"] = json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["children"] = json::array();
  for (const auto& ch : r.children) j["children"].push_back(to_json(ch));
  return j;
}

RecipeNode recipe_from_json(const json& j) {
  RecipeNode r;
  r.rule = j.value("rule", "");
  if (j.contains("params"))
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
      r.params[it.key()] = it.value().get<long long>();
  if (j.contains("children"))
    for (const auto& ch : j["children"]) r.children.push_back(recipe_from_json(ch));
  return r;
}

json to_json(const SchgddDesign& d) {
  json j;
  j["kind"] = "schgdd";
  j["n"] = d.n;
  j["m"] = d.m;
  j["t"] = d.t;
  j["k"] = d.k;
  j["base_blocks"] = json::array();
  for (const auto& b : d.base_blocks) {
    json jb = json::array();
    for (const auto& p : b.points) jb.push_back({p.group, p.residue});
    j["base_blocks"].push_back(jb);
  }
  j["recipe"] = to_json(d.recipe);
  return j;
}

json to_json(const Chdm& c) {
  json j;
  j["kind"] = "chdm";
  j["k"] = c.k;
  j["w"] = c.w;
  j["t"] = c.t;
  j["rows"] = c.rows;
  j["recipe"] = to_json(c.recipe);
  return j;
}

json to_json(const DifferenceFamily& f) {
  json j;
  j["kind"] = "df";
  j["flavor"] = to_string(f.flavor);
  j["g"] = f.g;
  j["t"] = f.t;
  j["h"] = f.h;
  j["blocks"] = f.blocks;
  j["recipe"] = to_json(f.recipe);
  return j;
}

SchgddDesign schgdd_from_json(const json& j) {
  if (j.value("kind", "") != "schgdd")
    throw Error("BadKind", "expected kind=schgdd");
  SchgddDesign d;
  d.n = j.at("n").get<int>();
  d.m = j.at("m").get<int>();
  d.t = j.at("t").get<int>();
  d.k = j.value("k", 3);
  for (const auto& jb : j.at("base_blocks")) {
    BaseBlock b;
    for (const auto& jp : jb)
      b.points.push_back({jp.at(0).get<int>(), jp.at(1).get<int>()});
    d.base_blocks.push_back(std::move(b));
  }
  if (j.contains("recipe")) d.recipe = recipe_from_json(j["recipe"]);
  return d;
}

Chdm chdm_from_json(const json& j) {
  if (j.value("kind", "") != "chdm") throw Error("BadKind", "expected kind=chdm");
  Chdm c;
  c.k = j.at("k").get<int>();
  c.w = j.at("w").get<int>();
  c.t = j.at("t").get<int>();
  c.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  if (j.contains("recipe")) c.recipe = recipe_from_json(j["recipe"]);
  return c;
}

DifferenceFamily df_from_json(const json& j) {
  if (j.value("kind", "") != "df") throw Error("BadKind", "expected kind=df");
  DifferenceFamily f;
  f.flavor = df_flavor_from_string(j.at("flavor").get<std::string>());
  f.g = j.at("g").get<int>();
  f.t = j.at("t").get<int>();
  f.h = j.at("h").get<int>();
  f.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  if (j.contains("recipe")) f.recipe = recipe_from_json(j["recipe"]);
  return f;
}

}  // namespace scd
