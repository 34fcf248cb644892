#pragma once

#include <vector>

#include "realdcp/coxeter_type.hpp"
#include "realdcp/linalg.hpp"
#include "realdcp/scalar.hpp"

namespace dcp::rootsys {

/// One exact vector per reflecting hyperplane, normalized so that the first
/// nonzero coordinate is positive, sorted lexicographically.
struct RootSystem {
  CoxeterType type;
  int dimension = 0;  // ambient dimension (rank for most types, rank+1 for A)
  std::vector<ScalarVec> positive_roots;
  std::vector<int> simple_roots;  // indices into positive_roots

  /// Integer model: every coordinate is an integer (all crystallographic
  /// realizations here are pre-scaled to make this so). Empty for H3, H4
  /// and I2(5), whose coordinates genuinely need sqrt 5.
  bool integral = false;
  std::vector<IntVec> int_roots;

  int rank() const { return type.rank; }
  long n_positive() const { return static_cast<long>(positive_roots.size()); }
};

RootSystem build_root_system(const CoxeterType& type);

/// Orthogonal reflection of v in the hyperplane of the given positive root.
ScalarVec reflect(const RootSystem& rs, int root_index, const ScalarVec& v);

}  // namespace dcp::rootsys
