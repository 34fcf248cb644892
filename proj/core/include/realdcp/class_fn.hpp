#pragma once

#include "realdcp/graded_ch.hpp"

namespace dcp::charcalc {

/// Class function on the hyperoctahedral group; classes are labelled by
/// pairs (lambda, mu): cycle lengths with cycle-product +1 and -1.
struct BClassFunction {
  int n = 0;
  std::map<PartitionPair, Rational> values;

  Rational at(const PartitionPair& cls) const {
    auto it = values.find(cls);
    if (it == values.end()) throw Error("no such conjugacy class");
    return it->second;
  }
  Rational at_identity() const {
    return at({Partition(std::vector<int>(n, 1)), Partition{}});
  }
  bool operator==(const BClassFunction& o) const { return n == o.n && values == o.values; }
};

/// all class labels of the rank-n hyperoctahedral group
std::vector<PartitionPair> b_class_labels(int n);

/// order of the centralizer of the class (2^len z for both cycle kinds)
Integer b_centralizer_order(const PartitionPair& cls);

/// trace on the class = coefficient of x_lambda y_mu times the centralizer order
BClassFunction class_function(const SymB& ch, int n);

/// inverse transform; reproduces ch exactly
SymB ch_from_class_function(const BClassFunction& f, int truncation);

/// <f, g> over the group, via coefficients and centralizer orders
Rational inner_product_b(const SymB& f, const SymB& g, int n);

/// Euler character of the type-B tower: the s = 1 specialization of the
/// graded generating function, cross-checked against the alternating sum of
/// the graded class functions.
BClassFunction euler_character_b(int n);

}  // namespace dcp::charcalc
