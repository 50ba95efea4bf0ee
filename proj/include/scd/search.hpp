#pragma once

#include <optional>
#include <vector>

#include "scd/core.hpp"

// Bounded backtracking provider for ingredient objects cited from external
// literature: small MGDDs, SCGDDs, PBDs, strictly cyclic GDDs, CHDMs, and
// raw SCHGDD base-block sets.  Everything returned has been re-verified; a
// persistent cache (DF_CACHE_DIR) stores successful finds as JSON with a
// metadata sidecar.

namespace scd::search {

inline constexpr long long kDefaultBudget = 100'000'000;

enum class Kind { Mgdd, Scgdd3, Scgdd4, Pbd, StrictGdd, Chdm, Schgdd };

enum class Existence { Yes, No, Unknown };

struct SearchSpec {
  Kind kind = Kind::Mgdd;
  std::map<std::string, long long> params;
  long long budget = kDefaultBudget;

  // Stable content key, e.g. "scgdd3-m2-n4"; used for the cache file name.
  std::string key() const;
};

// Transcribed necessary-and-sufficient existence conditions; Unknown is
// reserved for the published possible exceptions (and for kinds/parameter
// ranges the tables do not settle).
Existence ingredient_exists(const SearchSpec& spec);

// Typed finders.  Each checks the existence predicate first (throwing
// Error("KnownNonexistent") on a No verdict), then consults the cache, then
// searches.  Throws Error("BudgetExhausted") when the node budget runs out.

// 3-MGDD of type s^n: n groups of size s, s holes of size n.
Mgdd find_mgdd(int s, int n, long long budget = kDefaultBudget);

// k-SCGDD of type m^n, k in {3,4}.
Scgdd find_scgdd(int k, int m, int n, long long budget = kDefaultBudget);

// (v,K,1)-PBD.
Pbd find_pbd(int v, const std::vector<int>& K,
             long long budget = kDefaultBudget);

// Strictly cyclic K-GDD of type m^t, returned in difference-family form
// over Z_{mt} (forbidden differences = multiples of t).
DifferenceFamily find_strict_gdd(int m, int t, const std::vector<int>& K,
                                 long long budget = kDefaultBudget);

// General difference-family search over Z_{hgt}: covers Z_{hgt} minus the
// multiples of t; for Pdf/Hpdf flavors every block must admit a 0-translate
// inside the ele strip.
DifferenceFamily find_df(int g, int t, int h, DfFlavor flavor,
                         const std::vector<int>& K,
                         long long budget = kDefaultBudget);

// (3,wt;w)-CHDM via a direct (3,w^t) base-block search.
Chdm find_chdm(int w, int t, long long budget = kDefaultBudget);

// Raw base-block search for a 3-SCHGDD of type (n,m^t).
SchgddDesign find_schgdd(int n, int m, int t,
                         long long budget = kDefaultBudget);

// Complete traversal of the canonical base-block tree for a 3-SCHGDD of
// type (n,m^t).  Refuted is reported only when the whole tree was searched;
// a budget stop is Exhausted, never a nonexistence claim.
enum class ExhaustOutcome { Found, Refuted, Exhausted };
ExhaustOutcome exhaust_schgdd(int n, int m, int t,
                              long long budget = kDefaultBudget);

// Generic dispatcher over a SearchSpec; returns the found object as JSON.
json find_ingredient(const SearchSpec& spec);

}  // namespace scd::search
