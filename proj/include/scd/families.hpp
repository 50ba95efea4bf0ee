#pragma once

#include "scd/core.hpp"

// Difference-family builders: embedded small tables, parametric infinite
// families, and the recursive extension lemmas.  Every builder re-verifies
// its output before returning.

namespace scd::fam {

inline constexpr long long kDefaultBudget = 100'000'000;

// Verbatim catalog table by id (e.g. "A:v=95", "B:t=12", "Ex2.9:g=8,t=8").
DifferenceFamily catalog_family(const std::string& id);

// (v,K,1)-PDF + u -> (6u+v, K u {3}, 1)-PDF.  Requires u >= v and
// (u = 0,1 mod 4 with v = 1 mod 4) or (u = 0,3 mod 4 with v = 3 mod 4).
DifferenceFamily extend_pdf_six(const DifferenceFamily& base, int u,
                                long long budget = kDefaultBudget);

// (2t-1,K,1)-PDF reinterpreted as a (2t,2,K,1)-PDF (same block list).
DifferenceFamily pdf_double(const DifferenceFamily& base);

// (v,K,1)-PDF + u -> (v+6u+3, 4, K u {3}, 1)-PDF via a holey pair partition
// of [1,2u+1] minus one point with differences [(v+1)/2, (v-1)/2+u].
DifferenceFamily holey_pdf_4(const DifferenceFamily& base, int u,
                             long long budget = kDefaultBudget);

// (4t,4,{3,5},1)-PDF for t even, t >= 4, t != 8.
DifferenceFamily build_pdf_4t(int t, long long budget = kDefaultBudget);

// (8t,8,{3,5},1)-2-PDF for t even, t >= 8.
DifferenceFamily build_2pdf_8t(int t, long long budget = kDefaultBudget);

// (4t,4,{3,5},1)-CDF for t odd, t >= 7, t != 11.
DifferenceFamily build_cdf_4t_odd(int t, long long budget = kDefaultBudget);

// (16t,16,{3,5},1)-CDF for t even, t >= 4.
DifferenceFamily build_cdf_16t(int t, long long budget = kDefaultBudget);

// (v,K,1)-PDF for odd v in the supported residue classes (K subset of
// {3,4,5} chosen by residue).
DifferenceFamily build_pdf_345(int v, long long budget = kDefaultBudget);

}  // namespace scd::fam
