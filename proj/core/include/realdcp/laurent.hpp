#pragma once

#include <map>
#include <sstream>
#include <string>

#include "realdcp/rational.hpp"

namespace dcp::symfunc {

/// Laurent polynomial over Q in the half-grading letter s (s^2 = t, the
/// cohomological grading variable). Exponents may be negative.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long v) { set(0, Rational(v)); }  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& v) { set(0, v); }  // NOLINT
  static Laurent s_power(int k, Rational c = Rational(1)) {
    Laurent l;
    l.set(k, std::move(c));
    return l;
  }

  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& terms() const { return c_; }

  void set(int k, Rational v) {
    if (v == 0)
      c_.erase(k);
    else
      c_[k] = std::move(v);
  }
  void accumulate(int k, const Rational& v) {
    auto [it, fresh] = c_.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [k, v] : o.c_) accumulate(k, v);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [k, v] : o.c_) accumulate(k, -v);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ka, va] : a.c_)
      for (const auto& [kb, vb] : b.c_) r.accumulate(ka + kb, va * vb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend Laurent operator*(const Rational& c, const Laurent& a) {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [k, v] : a.c_) r.c_.emplace(k, c * v);
    return r;
  }

  /// s -> s^m (exponent scaling; this is how plethysm by p_m acts on s)
  Laurent scaled_exponents(int m) const {
    Laurent r;
    for (const auto& [k, v] : c_) r.c_.emplace(k * m, v);
    return r;
  }

  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const { return c_ < o.c_; }

  bool only_even_exponents() const {
    for (const auto& [k, v] : c_)
      if (k % 2) return false;
    return true;
  }
  int min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
  int max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  Rational at_one() const {
    Rational s = 0;
    for (const auto& [k, v] : c_) s += v;
    return s;
  }

  /// canonical text, exponents descending: "2*s^2 - 1/3*s^-1 + 4"
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [k, v] = *it;
      Rational a = v;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (k == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << "s^" << k;
      }
    }
    return os.str();
  }

 private:
  std::map<int, Rational> c_;
};

}  // namespace dcp::symfunc
