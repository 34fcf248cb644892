#pragma once

#include "realdcp/class_fn.hpp"

namespace dcp::h1sigma {

using charcalc::BClassFunction;

/// Canonical basis element of the degree-one cohomology of the type-B model:
/// either nu_{ij} (i < j) or omega_{ijk,phi} (i < j < k, phi(i) = +1, so phi
/// is stored as the two signs of j and k). Indices are 1-based.
struct H1Basis {
  bool is_nu = true;
  int i = 0, j = 0, k = 0;
  bool neg_j = false, neg_k = false;  // omega only

  bool operator<(const H1Basis& o) const {
    auto key = [](const H1Basis& b) {
      return std::tuple(b.is_nu ? 0 : 1, b.i, b.j, b.k, b.neg_j, b.neg_k);
    };
    return key(*this) < key(o);
  }
  bool operator==(const H1Basis& o) const {
    return is_nu == o.is_nu && i == o.i && j == o.j && k == o.k && neg_j == o.neg_j &&
           neg_k == o.neg_k;
  }
  std::string str() const;
};

/// all basis elements for rank n, canonically ordered
std::vector<H1Basis> h1_basis(int n);

/// nu_{ab} with arbitrary index order (sign-normalized), as a coefficient map
struct H1Vector {
  std::map<H1Basis, Rational> coords;

  void add(const H1Basis& b, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = coords.emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coords.erase(it);
    }
  }
  H1Vector& operator+=(const H1Vector& o) {
    for (const auto& [b, c] : o.coords) add(b, c);
    return *this;
  }
  friend H1Vector operator*(const Rational& c, const H1Vector& v) {
    H1Vector r;
    if (c == 0) return r;
    for (const auto& [b, x] : v.coords) r.coords.emplace(b, c * x);
    return r;
  }
  bool operator==(const H1Vector& o) const { return coords == o.coords; }
};

H1Vector nu(int a, int b);
H1Vector omega(int a, int b, int c, bool sa, bool sb, bool sc);  // signs of a,b,c

/// Signed permutation (eps, w): basis vector e_i maps to eps[w(i)] e_w(i).
/// Entries are 1-based internally via vectors of length n.
struct SignedPerm {
  std::vector<int> w;     // w[i] = image of i+1, 1-based values
  std::vector<int> eps;   // eps[i] = sign attached to coordinate i+1

  static SignedPerm identity(int n);
  int n() const { return static_cast<int>(w.size()); }
  /// this after other (group multiplication)
  SignedPerm compose(const SignedPerm& other) const;
  /// representative of the conjugacy class (lambda, mu)
  static SignedPerm class_representative(int n, const charcalc::PartitionPair& cls);
};

/// the displayed action of a signed permutation, extended linearly
H1Vector act_wbn(const SignedPerm& g, const H1Vector& v);

/// the extra involution: nu -> -nu, omega -> omega minus sign-weighted nus
H1Vector act_sigma(const H1Vector& v);

struct SigmaSpectrum {
  std::int64_t dim_plus = 0;
  std::int64_t dim_minus = 0;
  std::int64_t trace = 0;
};

/// eigenspace dimensions of the involution on the degree-one cohomology,
/// computed from the action matrix by exact rank computations
SigmaSpectrum sigma_spectrum(int n);

/// closed-form Lefschetz number of the involution (0 for odd n)
std::int64_t lefschetz_sigma(int n);

/// character of the basis action; must agree with the degree-1 entry of the
/// graded type-B character and with the induced-character route
BClassFunction h1_character(int n);

/// character of the sigma-fixed subspace: (tr g + tr g sigma)/2 per class
BClassFunction h1_sigma_fixed_character(int n);

}  // namespace dcp::h1sigma
