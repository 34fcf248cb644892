#pragma once

#include "realdcp/sym_a.hpp"

namespace dcp::symfunc {

using PartitionPair = std::pair<Partition, Partition>;  // (x-part, y-part)

/// Element of the hyperoctahedral ring Q[x_i, y_i] in the power-sum-style
/// generators, coefficients Laurent in s, truncated beyond a total degree.
class SymB {
 public:
  SymB() = default;
  explicit SymB(int truncation) : n_(truncation) {}

  static SymB zero(int truncation) { return SymB(truncation); }
  static SymB one(int truncation) {
    SymB f(truncation);
    f.set({Partition{}, Partition{}}, Laurent(1));
    return f;
  }
  static SymB x(int k, int truncation) {
    SymB f(truncation);
    if (k <= truncation) f.set({Partition{k}, Partition{}}, Laurent(1));
    return f;
  }
  static SymB y(int k, int truncation) {
    SymB f(truncation);
    if (k <= truncation) f.set({Partition{}, Partition{k}}, Laurent(1));
    return f;
  }
  static SymB monomial(const PartitionPair& lm, Laurent c, int truncation) {
    SymB f(truncation);
    if (lm.first.size() + lm.second.size() <= truncation) f.set(lm, std::move(c));
    return f;
  }

  int truncation() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<PartitionPair, Laurent>& terms() const { return terms_; }
  Laurent coeff(const PartitionPair& lm) const {
    auto it = terms_.find(lm);
    return it == terms_.end() ? Laurent() : it->second;
  }
  Laurent constant_term() const { return coeff({Partition{}, Partition{}}); }

  void set(const PartitionPair& lm, Laurent c) {
    if (lm.first.size() + lm.second.size() > n_) return;
    if (c.is_zero())
      terms_.erase(lm);
    else
      terms_[lm] = std::move(c);
  }
  void accumulate(const PartitionPair& lm, const Laurent& c) {
    if (lm.first.size() + lm.second.size() > n_ || c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(lm, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymB& operator+=(const SymB& o) {
    check(o);
    for (const auto& [l, c] : o.terms_) accumulate(l, c);
    return *this;
  }
  SymB& operator-=(const SymB& o) {
    check(o);
    for (const auto& [l, c] : o.terms_) accumulate(l, -c);
    return *this;
  }
  friend SymB operator+(SymB a, const SymB& b) { return a += b; }
  friend SymB operator-(SymB a, const SymB& b) { return a -= b; }
  friend SymB operator*(const SymB& a, const SymB& b) {
    a.check(b);
    SymB r(a.n_);
    for (const auto& [la, ca] : a.terms_)
      for (const auto& [lb, cb] : b.terms_) {
        if (la.first.size() + la.second.size() + lb.first.size() + lb.second.size() > a.n_)
          continue;
        r.accumulate({merge(la.first, lb.first), merge(la.second, lb.second)}, ca * cb);
      }
    return r;
  }
  friend SymB operator*(const Laurent& c, const SymB& a) {
    SymB r(a.n_);
    for (const auto& [l, v] : a.terms_) r.set(l, c * v);
    return r;
  }

  bool operator==(const SymB& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymB& o) const { return !(*this == o); }

  SymB homogeneous_part(int d) const {
    SymB r(n_);
    for (const auto& [l, c] : terms_)
      if (l.first.size() + l.second.size() == d) r.set(l, c);
    return r;
  }
  /// same terms under a different truncation degree (terms above it drop)
  SymB retruncated(int truncation) const {
    SymB r(truncation);
    for (const auto& [l, c] : terms_) r.set(l, c);
    return r;
  }
  int max_degree() const {
    int d = 0;
    for (const auto& [l, c] : terms_) d = std::max(d, l.first.size() + l.second.size());
    return d;
  }

  /// x_i -> (-1)^(i-1) x_i, y_i -> (-1)^i y_i
  SymB tilde() const {
    SymB r(n_);
    for (const auto& [l, c] : terms_) {
      int sign = (l.first.size() - l.first.length() + l.second.size()) % 2;
      r.set(l, sign ? -c : c);
    }
    return r;
  }

  /// y_i -> -y_i (restriction of characters along the product-of-signs twist)
  SymB flip_y() const {
    SymB r(n_);
    for (const auto& [l, c] : terms_) r.set(l, l.second.length() % 2 ? -c : c);
    return r;
  }

  /// x_i -> sx * p_i, y_i -> sy * p_i with sx, sy in {+1, -1}
  SymA substitute_to_a(int sx, int sy) const {
    SymA r(n_);
    for (const auto& [l, c] : terms_) {
      int sign = (sx < 0 ? l.first.length() : 0) + (sy < 0 ? l.second.length() : 0);
      r.accumulate(merge(l.first, l.second), sign % 2 ? -c : c);
    }
    return r;
  }

  std::string str() const;

 private:
  void check(const SymB& o) const {
    if (n_ != o.n_)
      throw TruncationMismatch("SymB truncation mismatch: " + std::to_string(n_) + " vs " +
                               std::to_string(o.n_));
  }
  int n_ = 0;
  std::map<PartitionPair, Laurent> terms_;
};

/// x_m o g and y_m o g: the generator-level plethystic action
SymB pleth_x(int m, const SymA& g);
SymB pleth_y(int m, const SymA& g);

/// right plethystic action f o g for f in the B ring, g in the A ring with
/// zero constant term: x_m sends p_j to x_{mj}; y_m sends p_j to x_{mj} for
/// even j and y_{mj} for odd j; s-exponents scale by the generator index.
SymB plethysm_b(const SymB& f, const SymA& g);

SymB mult_inverse(const SymB& f);

SymB parse_sym_b(const std::string& text, int truncation);

}  // namespace dcp::symfunc
