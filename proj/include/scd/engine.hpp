#pragma once

#include "scd/core.hpp"

// Feasibility oracle for the existence theorems and the recipe resolver
// that re-enacts their proofs to build any in-scope (n,m,t).

namespace scd::engine {

inline constexpr long long kDefaultBudget = 100'000'000;

enum class Verdict {
  Exists,
  Nonexistent,
  PossibleException,
  InfeasibleNecessary,
  OutOfTheoremScope,
};

std::string to_string(Verdict v);

struct Feasibility {
  Verdict verdict = Verdict::InfeasibleNecessary;
  std::string reason;  // theorem/lemma id + clause
};

// Pure arithmetic on (n,m,t): n=3 decided for every t; n>=4 decided for odd
// t only, even t gets necessary-condition screening (OutOfTheoremScope).
Feasibility feasibility(int n, int m, int t);

// Resolve the existence proof's decision tree.  force=true additionally
// attempts bounded searches for PossibleException / OutOfTheoremScope
// parameters (a success there is a finding outside the theorems).
SchgddDesign build_schgdd(int n, int m, int t,
                          long long budget = kDefaultBudget,
                          bool force = false);

Chdm build_chdm(int m, int t, long long budget = kDefaultBudget);

// Human-readable recipe trace, one line per node.
std::string explain(const RecipeNode& recipe);
std::string explain(const SchgddDesign& d);
std::string explain(const Chdm& c);
std::string explain(const DifferenceFamily& f);

}  // namespace scd::engine
