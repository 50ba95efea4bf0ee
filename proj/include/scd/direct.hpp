#pragma once

#include "scd/core.hpp"

// Explicit constructions: closed-form designs, embedded base-block tables
// with group-action expansion, the residue-class search licensed by the
// character-sum bound, and exhaustive nonexistence certification.

namespace scd::direct {

inline constexpr long long kDefaultBudget = 100'000'000;

// (3,1^t) for odd t: base blocks {(0,0),(1,x),(2,2x)}, x in [1,t-1].
SchgddDesign schgdd_3_1t(int t);

// (3,m)-CDM for odd m: columns (0, j, 2j).
Cdm cdm_odd(int m);

// (3,2t;2)-CHDM, t >= 4.
Chdm chdm_3_2t(int t, long long budget = kDefaultBudget);

// (3,4t;4)-CHDM, t >= 4.
Chdm chdm_3_4t(int t, long long budget = kDefaultBudget);

// (3,2^x t;2^x)-CHDM, x >= 3, t >= 5.
Chdm chdm_3_2xt(int x, int t, long long budget = kDefaultBudget);

// (6,3^3): six initial blocks developed by (+1,-) mod (5,-).
SchgddDesign schgdd_6_3_3();

// Smallest x mod p with x and x+1 both quadratic nonresidues and x-1 a
// nonzero quadratic residue; p prime >= 5.
int weil_find_x(int p);

// (6,2^p) for prime p >= 3.
SchgddDesign schgdd_6_2p(int p);

// (n,2^3) for n in {10,15,18,27}, from the embedded orbit tables.
SchgddDesign schgdd_small_2cubed(int n);

// Complete backtracking refutation.  Nonexistent only on a fully traversed
// tree; Found if a design turned up; Exhausted on budget stop.
enum class NonexistenceOutcome { Nonexistent, Found, Exhausted };
NonexistenceOutcome prove_nonexistence_exhaustive(
    int n, int m, int t, long long budget = kDefaultBudget);

}  // namespace scd::direct
