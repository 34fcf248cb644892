#include "realdcp/h1.hpp"

#include <algorithm>

#include "realdcp/onedim.hpp"

namespace dcp::h1sigma {

using charcalc::PartitionPair;
using symfunc::Partition;

std::string H1Basis::str() const {
  if (is_nu) return "nu(" + std::to_string(i) + "," + std::to_string(j) + ")";
  auto sgn = [](bool neg) { return neg ? "-" : "+"; };
  return "omega(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
         ";+" + sgn(neg_j) + sgn(neg_k) + ")";
}

std::vector<H1Basis> h1_basis(int n) {
  std::vector<H1Basis> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({true, i, j, 0, false, false});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int sj = 0; sj < 2; ++sj)
          for (int sk = 0; sk < 2; ++sk)
            out.push_back({false, i, j, k, sj == 1, sk == 1});
  std::sort(out.begin(), out.end());
  return out;
}

H1Vector nu(int a, int b) {
  if (a == b) throw Error("nu needs distinct indices");
  H1Vector v;
  if (a < b)
    v.add({true, a, b, 0, false, false}, 1);
  else
    v.add({true, b, a, 0, false, false}, -1);
  return v;
}

H1Vector omega(int a, int b, int c, bool sa, bool sb, bool sc) {
  if (a == b || a == c || b == c) throw Error("omega needs distinct indices");
  struct E {
    int idx;
    bool neg;
  };
  std::array<E, 3> e{{{a, sa}, {b, sb}, {c, sc}}};
  // sort indices, tracking the sign of the permutation
  int sign = 1;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2 - r; ++s)
      if (e[s].idx > e[s + 1].idx) {
        std::swap(e[s], e[s + 1]);
        sign = -sign;
      }
  // phi is only defined up to a global flip; pin phi(min) = +1
  if (e[0].neg)
    for (auto& x : e) x.neg = !x.neg;
  H1Vector v;
  v.add({false, e[0].idx, e[1].idx, e[2].idx, e[1].neg, e[2].neg}, sign);
  return v;
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm g;
  g.w.resize(n);
  g.eps.assign(n, 1);
  for (int i = 0; i < n; ++i) g.w[i] = i + 1;
  return g;
}

SignedPerm SignedPerm::compose(const SignedPerm& other) const {
  const int m = n();
  if (other.n() != m) throw Error("signed permutation rank mismatch");
  SignedPerm r;
  r.w.resize(m);
  r.eps.resize(m);
  std::vector<int> winv(m + 1);
  for (int i = 0; i < m; ++i) winv[w[i]] = i + 1;
  for (int i = 0; i < m; ++i) r.w[i] = w[other.w[i] - 1];
  // sign at coordinate c: eps[c] from this, times other's sign pulled through
  for (int c = 1; c <= m; ++c) r.eps[c - 1] = eps[c - 1] * other.eps[winv[c] - 1];
  return r;
}

SignedPerm SignedPerm::class_representative(int n, const PartitionPair& cls) {
  if (cls.first.size() + cls.second.size() != n)
    throw Error("class label does not have total size n");
  SignedPerm g = identity(n);
  int pos = 0;
  auto place = [&](int len, bool negative) {
    for (int t = 0; t < len; ++t) g.w[pos + t] = pos + 1 + ((t + 1) % len);
    if (negative) g.eps[pos] = -1;
    pos += len;
  };
  for (int len : cls.first.parts) place(len, false);
  for (int len : cls.second.parts) place(len, true);
  return g;
}

H1Vector act_wbn(const SignedPerm& g, const H1Vector& v) {
  H1Vector out;
  for (const auto& [b, c] : v.coords) {
    if (b.is_nu) {
      int wi = g.w[b.i - 1], wj = g.w[b.j - 1];
      Rational s(g.eps[wi - 1] * g.eps[wj - 1]);
      out += (c * s) * nu(wi, wj);
    } else {
      int wi = g.w[b.i - 1], wj = g.w[b.j - 1], wk = g.w[b.k - 1];
      bool si = g.eps[wi - 1] < 0;  // phi(i) = +1 before the action
      bool sj = (g.eps[wj - 1] < 0) != b.neg_j;
      bool sk = (g.eps[wk - 1] < 0) != b.neg_k;
      out += c * omega(wi, wj, wk, si, sj, sk);
    }
  }
  return out;
}

H1Vector act_sigma(const H1Vector& v) {
  H1Vector out;
  for (const auto& [b, c] : v.coords) {
    if (b.is_nu) {
      out.add(b, -c);
      continue;
    }
    out.add(b, c);
    int pi = 1, pj = b.neg_j ? -1 : 1, pk = b.neg_k ? -1 : 1;
    out += (c * Rational(-pi * pj)) * nu(b.i, b.j);
    out += (c * Rational(-pj * pk)) * nu(b.j, b.k);
    out += (c * Rational(-pk * pi)) * nu(b.k, b.i);
  }
  return out;
}

namespace {

H1Vector unit(const H1Basis& b) {
  H1Vector v;
  v.add(b, 1);
  return v;
}

// rank of a dense rational matrix by plain elimination
int rational_rank(std::vector<std::vector<Rational>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = Rational(1) / m[rank][c];
    for (int cc = c; cc < cols; ++cc) m[rank][cc] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

SigmaSpectrum sigma_spectrum(int n) {
  if (n < 2) throw ParseError("sigma_spectrum requires n >= 2");
  const auto basis = h1_basis(n);
  const int D = static_cast<int>(basis.size());
  std::map<H1Basis, int> index;
  for (int i = 0; i < D; ++i) index.emplace(basis[i], i);
  std::vector<std::vector<Rational>> mp(D, std::vector<Rational>(D, Rational(0)));
  std::vector<std::vector<Rational>> mm = mp;
  SigmaSpectrum sp;
  for (int c = 0; c < D; ++c) {
    H1Vector img = act_sigma(unit(basis[c]));
    for (const auto& [b, v] : img.coords) {
      int r = index.at(b);
      mp[r][c] = v;
      mm[r][c] = v;
      if (r == c) sp.trace += to_int64(v);
    }
    mp[c][c] -= 1;  // sigma - id
    mm[c][c] += 1;  // sigma + id
  }
  sp.dim_plus = D - rational_rank(std::move(mp));
  sp.dim_minus = D - rational_rank(std::move(mm));
  return sp;
}

std::int64_t lefschetz_sigma(int n) {
  if (n < 2) throw ParseError("lefschetz_sigma requires n >= 2");
  if (n % 2) return 0;
  Integer num = factorial(n) * factorial(n - 2);
  Integer den = factorial(n / 2) * factorial((n - 2) / 2);
  if (num % den != 0) throw Error("non-integral Lefschetz value");
  Integer v = num / den;
  if (((n - 2) / 2) % 2) v = -v;
  if (!v.fits_slong_p()) throw Error("Lefschetz value overflow");
  return v.get_si();
}

namespace {

Rational trace_of(int n, const SignedPerm& g, bool with_sigma) {
  Rational tr = 0;
  for (const auto& b : h1_basis(n)) {
    H1Vector img = with_sigma ? act_wbn(g, act_sigma(unit(b))) : act_wbn(g, unit(b));
    auto it = img.coords.find(b);
    if (it != img.coords.end()) tr += it->second;
  }
  return tr;
}

}  // namespace

BClassFunction h1_character(int n) {
  if (n < 2) throw ParseError("h1_character requires n >= 2");
  BClassFunction f;
  f.n = n;
  for (const auto& cls : charcalc::b_class_labels(n))
    f.values[cls] = trace_of(n, SignedPerm::class_representative(n, cls), false);
  // both independent routes must give the same class function
  charcalc::SymB ind = charcalc::h1_induction_ch_b(n);  // itself checked vs the graded entry
  BClassFunction via_ind = charcalc::class_function(ind, n);
  if (!(f == via_ind))
    throw ConsistencyError("h1-character",
                           "basis-action character differs from the induced character at n = " +
                               std::to_string(n));
  return f;
}

BClassFunction h1_sigma_fixed_character(int n) {
  if (n < 2) throw ParseError("h1_sigma_fixed_character requires n >= 2");
  BClassFunction f;
  f.n = n;
  for (const auto& cls : charcalc::b_class_labels(n)) {
    SignedPerm g = SignedPerm::class_representative(n, cls);
    f.values[cls] = (trace_of(n, g, false) + trace_of(n, g, true)) / 2;
  }
  return f;
}

}  // namespace dcp::h1sigma
