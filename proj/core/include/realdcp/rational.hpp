#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "realdcp/errors.hpp"

namespace dcp {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in canonical (reduced, positive denominator) form
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw Error("rational does not fit in int64: " + q.get_str());
  return q.get_num().get_si();
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rational pow_rational(const Rational& q, long e) {
  if (e == 0) return 1;
  Rational base = e > 0 ? q : Rational(1) / q;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc = 1;
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace dcp
