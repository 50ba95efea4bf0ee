#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

// Core domain types for semi-cyclic holey group divisible designs and their
// relatives: difference matrices and difference families.  All residues are
// canonical integers in [0, modulus); every subtraction is reduced
// immediately.  Values are immutable after construction by convention.

namespace scd {

using json = nlohmann::json;

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

inline int mod(long long a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

struct Point {
  int group = 0;
  int residue = 0;
  auto operator<=>(const Point&) const = default;
};

struct BaseBlock {
  std::vector<Point> points;

  BaseBlock() = default;
  explicit BaseBlock(std::vector<Point> pts) : points(std::move(pts)) {}

  int size() const { return static_cast<int>(points.size()); }
  void canonicalize();
  auto operator<=>(const BaseBlock&) const = default;
};

struct RecipeNode {
  std::string rule;
  std::map<std::string, long long> params;
  std::vector<RecipeNode> children;

  RecipeNode() = default;
  explicit RecipeNode(std::string r, std::map<std::string, long long> p = {},
                      std::vector<RecipeNode> ch = {})
      : rule(std::move(r)), params(std::move(p)), children(std::move(ch)) {}
};

struct SchgddDesign {
  int n = 0;  // group count
  int m = 0;  // hole intersection size
  int t = 0;  // hole count
  int k = 3;  // block size
  std::vector<BaseBlock> base_blocks;
  RecipeNode recipe;

  int modulus() const { return m * t; }
  void canonicalize();
};

struct Chdm {
  int k = 3;
  int w = 1;
  int t = 0;  // modulus w*t, w*(t-1) columns
  std::vector<std::vector<int>> rows;
  RecipeNode recipe;

  int modulus() const { return w * t; }
  int cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

struct Cdm {
  int k = 3;
  int m = 0;
  std::vector<std::vector<int>> rows;  // k rows, m columns over Z_m
};

enum class DfFlavor { Cdf, Pdf, Hpdf };

std::string to_string(DfFlavor f);
DfFlavor df_flavor_from_string(const std::string& s);

struct DifferenceFamily {
  int g = 1;
  int t = 0;
  int h = 1;
  DfFlavor flavor = DfFlavor::Cdf;
  std::vector<std::vector<int>> blocks;  // subsets of Z_{h*g*t}
  RecipeNode recipe;

  int modulus() const { return h * g * t; }
};

// Auxiliary ingredient designs (searched or data-derived).

// l-MGDD of type s^n: points I_n x I_s, groups {i} x I_s, holes I_n x {j};
// the full block list (no cyclic structure).
struct Mgdd {
  int n = 0;  // group count
  int s = 0;  // hole count = group size
  std::vector<std::vector<Point>> blocks;  // Point = (group, hole index)
};

// K-SCGDD of type m^n: base blocks on I_n x Z_m, Delta_ij = Z_m for i != j.
struct Scgdd {
  int n = 0;
  int m = 0;
  std::vector<BaseBlock> base_blocks;
};

struct Pbd {
  int v = 0;
  std::vector<std::vector<int>> blocks;
};

// ---- operations ----

// Multiset (sorted vector) of differences x - y mod mt over ordered
// cross-group incidences (i,x),(j,y) within base blocks.
std::vector<int> delta_pair_multiset(const SchgddDesign& d, int i, int j);

// All mt translates of every base block.
std::vector<BaseBlock> develop(const SchgddDesign& d);

// Shift residues so the minimum becomes 0.
BaseBlock normalize_block(const BaseBlock& b, int modulus);

// (t-1)n(n-1)m/6; throws NotDivisible if not integral.
long long expected_base_block_count(int n, int m, int t);

// Lemma-1.4 style equivalence between a (k,wt;w)-CHDM and a k-SCHGDD of
// type (k, w^t).  Round trip is the identity up to canonical form.
SchgddDesign chdm_to_schgdd(const Chdm& c);
Chdm schgdd_to_chdm(const SchgddDesign& d);

// ---- serialization ----

json to_json(const RecipeNode& r);
RecipeNode recipe_from_json(const json& j);

json to_json(const SchgddDesign& d);
json to_json(const Chdm& c);
json to_json(const DifferenceFamily& f);

SchgddDesign schgdd_from_json(const json& j);
Chdm chdm_from_json(const json& j);
DifferenceFamily df_from_json(const json& j);

}  // namespace scd
