#pragma once

#include <optional>

#include "scd/core.hpp"

// Embedded data catalog: verbatim tables (difference families, difference
// matrices, pair partitions, and directly-listed designs), frozen at build
// time and re-verifiable on demand.

namespace scd {

namespace detail {
const std::string& catalog_json();
}

struct CatalogDesignData {
  std::string id;
  int n = 0, m = 0, t = 0;
  // Either a finished base-block list ("blocks") or seeds plus an expansion
  // scheme (Lemma 6.7 rotation, Lemma 7.x beta-orbit).
  std::vector<std::vector<Point>> blocks;        // already relabeled
  std::vector<std::vector<int>> seeds_int;       // raw integer triples (L7.x)
  std::vector<std::vector<Point>> seeds_pt;      // (group, residue) seeds (L6.7)
  std::string expand;                            // "", "rot5", "beta"
  int beta_step = 0, beta_order = 0;
};

namespace catalog {

// Difference families by id, e.g. "A:v=95", "B:t=12", "C:t=14", "F:t=9",
// "G:t=12", "L8t:t=8" (alias "L4.14:t=8"), "ExPDF:v=59", "Ex2.9:g=8,t=8",
// "Ex2.10:g=8,t=8", "Ex2.11", "Ex:cdf-256-32" (alias "Ex2.8").
DifferenceFamily family(const std::string& id);
std::optional<DifferenceFamily> family_if(const std::string& id);
std::vector<std::string> family_ids();

// CHDM matrices: "L5.4:t=14", "L5.4:t=15", "L5.5:t=5|8|11", "L5.6:x=3,t=6".
Chdm chdm(const std::string& id);
std::optional<Chdm> chdm_if(const std::string& id);
std::vector<std::string> chdm_ids();

// Pair partitions keyed by (d,u): Appendix D (d=17), Appendix E (d=33).
// Returns pairs plus hole position c.
struct PairData {
  int d = 0, u = 0, c = 0;
  std::vector<std::pair<int, int>> pairs;
};
std::optional<PairData> pair_partition(int d, int u);

// Directly listed designs: "L6.7", "L6.11:p=3", "L7.1".."L7.4".
std::optional<CatalogDesignData> design(const std::string& id);
std::vector<std::string> design_ids();

std::vector<std::string> all_ids();

}  // namespace catalog
}  // namespace scd
