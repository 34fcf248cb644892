#pragma once

#include "realdcp/even_poset.hpp"

namespace dcp::flats {

/// Independent combinatorial model of the B_n even poset, built from signed
/// partition data: a ground set I (|I| even) absorbed into the sign-flip
/// block, plus disjoint signed blocks of odd size with at least 3 elements
/// (a sign function up to global flip per block). No span arithmetic is
/// involved: ranks, the order, covers and Moebius numbers all come from the
/// combinatorics. Elements are labelled by B_n root sets so the result can
/// be compared with the flat enumeration verbatim.
EvenPoset dowling_even_poset(int n);

}  // namespace dcp::flats
