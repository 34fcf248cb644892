#pragma once

#include "realdcp/schur.hpp"
#include "realdcp/series.hpp"

namespace dcp::charcalc {

using symfunc::Partition;
using symfunc::PartitionPair;
using symfunc::SymA;
using symfunc::SymB;

/// Graded Frobenius characteristic: per_degree[i] is the characteristic of
/// the degree-i cohomology, an s-free homogeneous symmetric function.
struct GradedChA {
  int n = 0;
  std::vector<SymA> per_degree;
  std::vector<std::int64_t> dims() const;  // n! * coefficient of p[1,...,1]
};

struct GradedChB {
  int n = 0;
  std::vector<SymB> per_degree;
  std::vector<std::int64_t> dims() const;  // 2^n n! * coefficient of x[1,...,1]y[]
};

/// Graded character of the symmetric group S_n on the cohomology of the
/// compactified real model of type A_{n-1} (a point for n = 1, 2).
GradedChA type_a_graded_ch(int n);

/// Graded character of the hyperoctahedral group on the type-B model.
GradedChB type_b_graded_ch(int n);

/// Type D via the blow-up reduction: B_n minus the induction of B_{n-2}
/// cohomology twisted by the sign character of B_2. Entries are verified to
/// be genuine characters (nonnegative integral multiplicities).
GradedChB type_d_graded_ch(int n);

/// Specializations x_i, y_i -> p_i (sign-subgroup invariants) and
/// x_i -> p_i, y_i -> -p_i (product-of-signs isotypic part).
GradedChA gamma_invariant_ch(int n);
GradedChA gamma_prod_ch(int n);

enum class OneDimChar { Trivial, Eps, Prod, EpsProd };
const char* one_dim_name(OneDimChar c);

/// Characteristic of a one-dimensional hyperoctahedral character.
SymB one_dim_ch(int n, OneDimChar which, int truncation = -1);

}  // namespace dcp::charcalc
