#pragma once

#include <string>
#include <vector>

#include "realdcp/rational.hpp"

namespace dcp::rootsys {

/// Element of the real quadratic field Q(sqrt 5): `rat + surd * sqrt(5)`.
/// This is the smallest field containing every root coordinate we use;
/// the surd part is identically zero outside types H3, H4 and I2(5).
struct Scalar {
  Rational rat;
  Rational surd;

  Scalar() : rat(0), surd(0) {}
  Scalar(long v) : rat(v), surd(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : rat(std::move(r)), surd(0) {}  // NOLINT
  Scalar(Rational r, Rational s) : rat(std::move(r)), surd(std::move(s)) {}

  static Scalar sqrt5() { return Scalar(Rational(0), Rational(1)); }
  /// The golden ratio (1 + sqrt 5)/2.
  static Scalar phi() { return Scalar(Rational(1, 2), Rational(1, 2)); }

  bool is_zero() const { return rat == 0 && surd == 0; }
  bool is_rational() const { return surd == 0; }

  Scalar operator-() const { return Scalar(-rat, -surd); }
  Scalar& operator+=(const Scalar& o) {
    rat += o.rat;
    surd += o.surd;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    rat -= o.rat;
    surd -= o.surd;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    // (a + b sqrt5)(c + d sqrt5) = (ac + 5bd) + (ad + bc) sqrt5
    Rational a = rat, b = surd;
    rat = a * o.rat + 5 * b * o.surd;
    surd = a * o.surd + b * o.rat;
    return *this;
  }

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }

  Scalar inverse() const {
    // 1/(a + b sqrt5) = (a - b sqrt5)/(a^2 - 5 b^2); the norm is nonzero
    // for nonzero elements since sqrt5 is irrational.
    Rational norm = rat * rat - 5 * surd * surd;
    if (norm == 0) throw Error("division by zero in Q(sqrt5)");
    return Scalar(rat / norm, -surd / norm);
  }
  friend Scalar operator/(const Scalar& l, const Scalar& r) { return l * r.inverse(); }

  bool operator==(const Scalar& o) const { return rat == o.rat && surd == o.surd; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Sign of a + b sqrt5 as a real number, computed exactly.
  int sign() const {
    int sa = sgn(rat), sb = sgn(surd);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against 5 b^2
    int cmp = cmp_abs(rat * rat, 5 * surd * surd);
    return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
  }
  bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }

  std::string str() const {
    if (surd == 0) return rat.get_str();
    std::string s = surd.get_str() + "*sqrt5";
    if (rat == 0) return s;
    return rat.get_str() + (surd > 0 ? "+" : "") + s;
  }

 private:
  static int cmp_abs(const Rational& x, const Rational& y) { return cmp(x, y); }
};

using ScalarVec = std::vector<Scalar>;

inline Scalar dot(const ScalarVec& a, const ScalarVec& b) {
  Scalar acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

/// Lexicographic order on coordinate vectors, with the exact field order.
inline bool lex_less(const ScalarVec& a, const ScalarVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int s = (a[i] - b[i]).sign();
    if (s != 0) return s < 0;
  }
  return false;
}

}  // namespace dcp::rootsys
