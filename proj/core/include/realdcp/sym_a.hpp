#pragma once

#include <map>

#include "realdcp/laurent.hpp"
#include "realdcp/partition.hpp"

namespace dcp::symfunc {

/// Symmetric function in the power-sum basis, coefficients Laurent in s,
/// truncated beyond a fixed total degree.
class SymA {
 public:
  SymA() = default;
  explicit SymA(int truncation) : n_(truncation) {}

  static SymA zero(int truncation) { return SymA(truncation); }
  static SymA one(int truncation) {
    SymA f(truncation);
    f.set(Partition{}, Laurent(1));
    return f;
  }
  static SymA p(int k, int truncation) {
    SymA f(truncation);
    if (k <= truncation) f.set(Partition{k}, Laurent(1));
    return f;
  }
  static SymA monomial(const Partition& lam, Laurent c, int truncation) {
    SymA f(truncation);
    if (lam.size() <= truncation) f.set(lam, std::move(c));
    return f;
  }

  int truncation() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, Laurent>& terms() const { return terms_; }
  Laurent coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Laurent() : it->second;
  }
  Laurent constant_term() const { return coeff(Partition{}); }

  void set(const Partition& lam, Laurent c) {
    if (lam.size() > n_) return;
    if (c.is_zero())
      terms_.erase(lam);
    else
      terms_[lam] = std::move(c);
  }
  void accumulate(const Partition& lam, const Laurent& c) {
    if (lam.size() > n_ || c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(lam, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymA& operator+=(const SymA& o) {
    check(o);
    for (const auto& [l, c] : o.terms_) accumulate(l, c);
    return *this;
  }
  SymA& operator-=(const SymA& o) {
    check(o);
    for (const auto& [l, c] : o.terms_) accumulate(l, -c);
    return *this;
  }
  friend SymA operator+(SymA a, const SymA& b) { return a += b; }
  friend SymA operator-(SymA a, const SymA& b) { return a -= b; }
  friend SymA operator*(const SymA& a, const SymA& b) {
    a.check(b);
    SymA r(a.n_);
    for (const auto& [la, ca] : a.terms_)
      for (const auto& [lb, cb] : b.terms_) {
        if (la.size() + lb.size() > a.n_) continue;
        r.accumulate(merge(la, lb), ca * cb);
      }
    return r;
  }
  friend SymA operator*(const Laurent& c, const SymA& a) {
    SymA r(a.n_);
    for (const auto& [l, v] : a.terms_) r.set(l, c * v);
    return r;
  }

  bool operator==(const SymA& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymA& o) const { return !(*this == o); }

  SymA homogeneous_part(int d) const {
    SymA r(n_);
    for (const auto& [l, c] : terms_)
      if (l.size() == d) r.set(l, c);
    return r;
  }
  /// same terms under a different truncation degree (terms above it drop)
  SymA retruncated(int truncation) const {
    SymA r(truncation);
    for (const auto& [l, c] : terms_) r.set(l, c);
    return r;
  }
  int max_degree() const {
    int d = 0;
    for (const auto& [l, c] : terms_) d = std::max(d, l.size());
    return d;
  }

  /// p_i -> (-1)^(i-1) p_i (tensoring with the sign character)
  SymA tilde() const {
    SymA r(n_);
    for (const auto& [l, c] : terms_) {
      int sign = (l.size() - l.length()) % 2;  // parity of sum of (part - 1)
      r.set(l, sign ? -c : c);
    }
    return r;
  }

  std::string str() const;

 private:
  void check(const SymA& o) const {
    if (n_ != o.n_)
      throw TruncationMismatch("SymA truncation mismatch: " + std::to_string(n_) + " vs " +
                               std::to_string(o.n_));
  }
  int n_ = 0;
  std::map<Partition, Laurent> terms_;
};

/// p_m o g: partition parts and s-exponents scale by m
SymA pleth_p(int m, const SymA& g);

/// f o g; g must have zero constant term. p_m acts on g by scaling partition
/// parts and s-exponents by m; coefficients of f pass through unchanged.
SymA plethysm(const SymA& f, const SymA& g);

/// two-sided plethystic inverse of f = p_1 + higher terms
SymA plethystic_inverse(const SymA& f);

/// f^{-1} under multiplication; constant term of f must be 1
SymA mult_inverse(const SymA& f);

/// substitution p_i -> x^i: coefficients of x^0..x^truncation
std::vector<Laurent> substitute_powers(const SymA& f);

SymA parse_sym_a(const std::string& text, int truncation);

}  // namespace dcp::symfunc
