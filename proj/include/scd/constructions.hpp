#pragma once

#include <functional>
#include <map>

#include "scd/core.hpp"

// The seven recursive combinators.  Each is a pure function from verified
// ingredients to a composite design; every output is re-verified before
// return (verification is the artifact's trust model, so the cost is
// accepted even where correctness is provable).

namespace scd::cons {

// (n,(gw)^t) + (n,g^w) -> (n,g^{wt}): inner design embedded on the order-gw
// subgroup via x' -> t*x'.
SchgddDesign c31_fill(const SchgddDesign& outer, const SchgddDesign& inner);

// K-SCGDD of type g^n inflated by inner (k,w^t) designs, one per block size.
SchgddDesign c32_inflate(const Scgdd& outer,
                         const std::map<int, SchgddDesign>& inners);

// Strictly cyclic K-GDD of type w^t (as a CDF-shaped family over Z_{wt})
// with an l-MGDD of type k^n placed on each base block.
SchgddDesign c33_from_strict_gdd(const DifferenceFamily& gdd,
                                 const std::map<int, Mgdd>& inners);

// (n,w^t) x (k,v)-CDM -> (n,(wv)^t).
SchgddDesign c34_cdm_product(const SchgddDesign& base, const Cdm& cdm);

// gcd(wt,hg)=1 weave: (n,w^t), (n,(hw)^t), (k,hg;h)-CHDM -> (n,(hgw)^t).
SchgddDesign c35_chdm_weave(const SchgddDesign& base, const SchgddDesign& hw,
                            const Chdm& chdm);

// Perfect weave (no gcd condition): perfect (n,w^t), h-perfect (n,(hw)^t),
// (k,hg;h)-CHDM -> hg-perfect (n,(hgw)^t).
SchgddDesign c36_perfect_weave(const SchgddDesign& perfect,
                               const SchgddDesign& hperf, const Chdm& chdm);

// (hwt,hw,K,1)-h-PDF + l-MGDDs -> h-perfect (n,(hw)^t).
SchgddDesign c37_perfect_from_pdf(const DifferenceFamily& fam,
                                  const std::map<int, Mgdd>& inners);

}  // namespace scd::cons
