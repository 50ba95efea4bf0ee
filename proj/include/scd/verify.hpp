#pragma once

#include "scd/core.hpp"

// Verifiers are the trust anchor: they re-check structure from scratch and
// never trust type invariants.  Failures are reports, not exceptions.

namespace scd {

struct Violation {
  std::string category;  // e.g. "missing difference", "duplicate difference"
  std::string where;     // pair / row-pair / block context
  long long value = 0;
  int multiplicity = 0;
};

struct VerificationReport {
  bool pass = true;
  std::vector<Violation> violations;
  bool truncated = false;  // capped at kMaxViolations entries

  static constexpr int kMaxViolations = 1000;

  void add(const std::string& category, const std::string& where,
           long long value, int multiplicity);
  json to_json() const;
  std::string summary() const;
};

VerificationReport verify_schgdd(const SchgddDesign& d);
VerificationReport verify_h_perfect(const SchgddDesign& d, int h);
VerificationReport verify_chdm(const Chdm& c);
VerificationReport verify_cdm(const Cdm& c);
VerificationReport verify_difference_family(const DifferenceFamily& f);

VerificationReport verify_mgdd(const Mgdd& d);
VerificationReport verify_scgdd(const Scgdd& d);
VerificationReport verify_pbd(const Pbd& d);

}  // namespace scd
