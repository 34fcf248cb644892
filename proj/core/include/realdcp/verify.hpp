#pragma once

#include <string>
#include <vector>

#include "realdcp/even_poset.hpp"

namespace dcp {

struct CheckResult {
  std::string name;
  std::string status;  // "PASS", "FAIL", "SKIP"
  std::string detail;
};

struct VerifyOptions {
  flats::EnumOptions enum_opts;
  /// poset size bound for the quadratic checks (zeta inversion, cover
  /// completeness, semimodularity); larger posets report SKIP
  std::size_t quadratic_limit = 4000;
  /// bound on n for the character-side cross checks
  int character_limit = 7;
};

/// Runs every named cross-check applicable to the type; one result per check.
std::vector<CheckResult> verify_type(const rootsys::CoxeterType& t,
                                     const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace dcp
