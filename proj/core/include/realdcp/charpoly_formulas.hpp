#pragma once

#include "realdcp/even_poset.hpp"
#include "realdcp/laurent.hpp"

namespace dcp::flats {

/// Product formula for the A_n characteristic polynomial.
CharPoly type_a_charpoly_formula(int n);

/// Closed-form B_n characteristic polynomial (binomial x factorial sum).
CharPoly type_b_charpoly_formula(int n);

/// D_n via the B reduction, using the closed B form on both terms.
CharPoly type_d_charpoly_formula(int n);

/// Euler characteristics in closed form, odd n only (throws otherwise).
std::int64_t type_a_euler_closed_form(int n);
std::int64_t type_b_euler_closed_form(int n);
std::int64_t type_d_euler_closed_form(int n);  // n >= 3 odd

/// chi(B_n) for n = 0..nmax extracted from the sech/exp generating function
/// over Q[s, s^-1][[x]]; an independent series route to the same polynomials.
std::vector<CharPoly> type_b_charpoly_series(int nmax);

/// Coefficient of x^n in sech((1/2) arcsinh(s x)), and in
/// exp((1/(2s)) arcsinh(s x)); exposed for the expansion identity tests.
symfunc::Laurent sech_half_arcsinh_coeff(int n);
symfunc::Laurent exp_half_arcsinh_coeff(int n);

}  // namespace dcp::flats
