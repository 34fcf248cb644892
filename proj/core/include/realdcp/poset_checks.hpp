#pragma once

#include "realdcp/even_poset.hpp"

namespace dcp::flats {

/// Recomputes every mu(0, x) by inverting the zeta (containment) matrix over
/// the integers, column by column, independently of the product-form Moebius
/// computation. Throws ConsistencyError on the first mismatch.
std::vector<std::int64_t> mobius_oracle(const EvenPoset& p);

/// Semimodularity in the sense used here: any two distinct covers of a common
/// element either have a common cover, or are both maximal.
bool semimodularity_check(const EvenPoset& p);

struct DRelationResult {
  bool applicable = true;
  CharPoly lhs;  // flat-enumerated characteristic polynomial of the D_n poset
  CharPoly rhs;  // chi(B_n) + C(n,2) t chi(B_{n-2})
};

/// Compares the two sides of the D_n reduction. n = 2 is reported as not
/// applicable (D2 is reducible); a mismatch throws ConsistencyError.
DRelationResult d_relation_check(int n, const EnumOptions& opts = {});

}  // namespace dcp::flats
