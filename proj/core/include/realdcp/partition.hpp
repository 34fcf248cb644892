#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "realdcp/rational.hpp"

namespace dcp::symfunc {

/// Integer partition, parts weakly decreasing.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

  void normalize() {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (int p : parts)
      if (p < 0) throw Error("negative part in partition");
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }

  /// disjoint union of parts (multiplication of power-sum monomials)
  friend Partition merge(const Partition& a, const Partition& b) {
    Partition r;
    r.parts.reserve(a.parts.size() + b.parts.size());
    r.parts = a.parts;
    r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
    r.normalize();
    return r;
  }

  Partition scaled(int m) const {
    Partition r = *this;
    for (int& p : r.parts) p *= m;
    return r;
  }

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const {
    if (size() != o.size()) return size() < o.size();
    return parts < o.parts;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + "]";
  }
};

/// order of the centralizer of a permutation of cycle type lambda in S_n
inline Integer z_of(const Partition& lambda) {
  Integer z = 1;
  int run = 0;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    z *= lambda.parts[i];
    ++run;
    if (i + 1 == lambda.parts.size() || lambda.parts[i + 1] != lambda.parts[i]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return z;
}

/// all partitions of n, in a fixed (lexicographic, largest part first) order
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxp) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace dcp::symfunc
