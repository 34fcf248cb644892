#pragma once

#include "realdcp/sym_b.hpp"

namespace dcp::symfunc {

/// chi^lambda(mu) for the symmetric group, by border-strip removal.
std::int64_t sn_character(const Partition& lambda, const Partition& mu);

/// Multiplicities of f (homogeneous of degree n, s-free coefficients) in the
/// irreducible basis: <f, s_alpha> = sum_mu c_mu chi^alpha(mu).
std::map<Partition, Rational> schur_multiplicities(const SymA& f, int n);

/// Same for the hyperoctahedral ring: irreducibles are indexed by pairs of
/// partitions with |alpha| + |beta| = n.
std::map<PartitionPair, Rational> double_schur_multiplicities(const SymB& f, int n);

/// true iff every multiplicity is a nonnegative integer
bool is_character(const SymA& f, int n);
bool is_character(const SymB& f, int n);

}  // namespace dcp::symfunc
