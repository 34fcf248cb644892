#pragma once

#include "realdcp/class_fn.hpp"

namespace dcp::charcalc {

struct OneDimRow {
  OneDimChar chi;
  int degree;
  Rational inner;  // <H^degree, chi> by inner product
  int closed;      // the closed-form value
  bool agree;
};

/// Multiplicities of the four one-dimensional hyperoctahedral characters in
/// every cohomology degree, by inner product against the graded character
/// and by the closed forms, cross-checked (mismatch throws).
std::vector<OneDimRow> one_dim_multiplicities(int n);

struct DOneDimRow {
  std::string group;  // "W(B)" or "W(D)"
  std::string chi;
  int degree;
  Rational inner;
  int closed;
  bool agree;
};

/// The analogous table for the type-D model: the four characters of the
/// hyperoctahedral group and the two one-dimensional characters of the
/// index-two reflection subgroup (via Frobenius reciprocity).
std::vector<DOneDimRow> type_d_one_dim_multiplicities(int n);

/// Degree-one cohomology as an induced character, built by multiplication of
/// characteristics; checked against the degree-1 entry of the graded
/// character (mismatch throws). The type A result lives in degree n+1 of the
/// A ring (a character of the symmetric group on n+1 letters).
SymA h1_induction_ch_a(int n);  // n >= 3
SymB h1_induction_ch_b(int n);  // n >= 2
SymB h1_induction_ch_d(int n);  // n >= 3

}  // namespace dcp::charcalc
