#pragma once

#include "realdcp/sym_b.hpp"

namespace dcp::symfunc {

/// sum over n of the characteristic of the trivial S_n-module: all p_lam/z_lam
SymA Exp(int truncation);
/// even- and odd-degree parts of Exp
SymA Cosh(int truncation);
SymA Sinh(int truncation);
/// multiplicative inverse of Cosh
SymA Sech(int truncation);
/// plethystic inverse of Sinh (odd-degree terms only)
SymA Arcsinh(int truncation);

/// sum over n of the characteristic of the trivial hyperoctahedral module:
/// x_lam y_mu / (2^len z 2^len z)
SymB ExpB(int truncation);
SymB CoshB(int truncation);
SymB SinhB(int truncation);
/// multiplicative inverse of CoshB (even-degree terms only)
SymB SechB(int truncation);

/// truncated exponential of a zero-constant-term element
SymA exp_of(const SymA& h);
SymB exp_of(const SymB& h);

/// Fast composed series through the exponential form: Exp o g is
/// exp(sum p_m o g / m), and the hyperbolic variants come from averaging
/// over g and -g. These agree with plethysm(...) term for term and keep the
/// deep-truncation evaluations cheap.
SymA pleth_exp_a(const SymA& g);
SymA pleth_cosh(const SymA& g);
SymA pleth_sinh(const SymA& g);
SymB pleth_exp_b(const SymA& g);
SymB pleth_cosh_b(const SymA& g);

/// Sech o g and Sech_B o g with the sign involution applied on the outside;
/// g must have odd-degree terms only (that is what makes the involution slide
/// through the composition).
SymA pleth_sech_tilde(const SymA& g);
SymB pleth_sech_b_tilde(const SymA& g);

}  // namespace dcp::symfunc
