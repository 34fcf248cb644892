#pragma once

#include <string>
#include <vector>

#include "realdcp/even_poset.hpp"
#include "realdcp/verify.hpp"

namespace dcp {

/// JSON report for one type: Betti numbers, graded characteristics, class
/// table, one-dimensional multiplicity table, and the named-check outcomes.
/// Characters are included for the classical families only.
std::string character_report_json(const rootsys::CoxeterType& t,
                                  const flats::EvenPoset& poset,
                                  const std::vector<CheckResult>& checks);

}  // namespace dcp
