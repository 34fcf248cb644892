#include "realdcp/onedim.hpp"

namespace dcp::charcalc {

using symfunc::Laurent;
using symfunc::Partition;

namespace {

int closed_form(OneDimChar chi, int n, int i) {
  switch (chi) {
    case OneDimChar::Trivial: return i == 0 ? 1 : 0;
    case OneDimChar::EpsProd: return (n % 3 != 2 && i == n / 3) ? 1 : 0;
    case OneDimChar::Prod: return 0;
    case OneDimChar::Eps: return (n % 2 == 0 && i == n / 2) ? 1 : 0;
  }
  return 0;
}

// characteristic of the induction of 1 x 1 x eps from (sign flips applied
// diagonally on three coordinates) x (permutations of those coordinates)
// up to the full rank-3 hyperoctahedral group
SymB ind_pm1_s3_ch(int truncation) {
  SymB f(truncation);
  // delta = +1: monomials of the plain permutations
  f.accumulate({Partition{1, 1, 1}, Partition{}}, Laurent(Rational(1, 12)));
  f.accumulate({Partition{2, 1}, Partition{}}, Laurent(Rational(-1, 4)));
  f.accumulate({Partition{3}, Partition{}}, Laurent(Rational(1, 6)));
  // delta = -1: a length-l cycle has cycle product (-1)^l
  f.accumulate({Partition{}, Partition{1, 1, 1}}, Laurent(Rational(1, 12)));
  f.accumulate({Partition{2}, Partition{1}}, Laurent(Rational(-1, 4)));
  f.accumulate({Partition{}, Partition{3}}, Laurent(Rational(1, 6)));
  return f;
}

}  // namespace

std::vector<OneDimRow> one_dim_multiplicities(int n) {
  if (n < 2) throw ParseError("one_dim_multiplicities requires n >= 2");
  GradedChB b = type_b_graded_ch(n);
  std::vector<OneDimRow> rows;
  for (OneDimChar chi : {OneDimChar::Trivial, OneDimChar::Eps, OneDimChar::Prod,
                         OneDimChar::EpsProd}) {
    SymB ch = one_dim_ch(n, chi, n);
    for (std::size_t i = 0; i < b.per_degree.size(); ++i) {
      OneDimRow r;
      r.chi = chi;
      r.degree = static_cast<int>(i);
      r.inner = inner_product_b(b.per_degree[i], ch, n);
      r.closed = closed_form(chi, n, static_cast<int>(i));
      r.agree = r.inner == r.closed;
      if (!r.agree)
        throw ConsistencyError("onedim-multiplicity",
                               std::string(one_dim_name(chi)) + " in degree " +
                                   std::to_string(i) + " at n = " + std::to_string(n) +
                                   ": inner product " + r.inner.get_str() + ", closed form " +
                                   std::to_string(r.closed));
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::vector<DOneDimRow> type_d_one_dim_multiplicities(int n) {
  if (n < 2) throw ParseError("type_d_one_dim_multiplicities requires n >= 2");
  GradedChB d = type_d_graded_ch(n);
  std::vector<DOneDimRow> rows;
  auto push = [&](const std::string& group, const std::string& chi, int i, Rational inner,
                  int closed) {
    DOneDimRow r{group, chi, i, std::move(inner), closed, false};
    r.agree = r.inner == r.closed;
    if (!r.agree)
      throw ConsistencyError("typed-onedim-multiplicity",
                             group + " character " + chi + " in degree " + std::to_string(i) +
                                 " at n = " + std::to_string(n) + ": inner product " +
                                 r.inner.get_str() + ", closed form " + std::to_string(closed));
    rows.push_back(std::move(r));
  };
  std::map<OneDimChar, SymB> chs;
  for (OneDimChar chi : {OneDimChar::Trivial, OneDimChar::Eps, OneDimChar::Prod,
                         OneDimChar::EpsProd})
    chs.emplace(chi, one_dim_ch(n, chi, n));
  for (std::size_t i = 0; i < d.per_degree.size(); ++i) {
    const SymB& h = d.per_degree[i];
    int ii = static_cast<int>(i);
    Rational m1 = inner_product_b(h, chs.at(OneDimChar::Trivial), n);
    Rational me = inner_product_b(h, chs.at(OneDimChar::Eps), n);
    Rational mp = inner_product_b(h, chs.at(OneDimChar::Prod), n);
    Rational mep = inner_product_b(h, chs.at(OneDimChar::EpsProd), n);
    push("W(B)", "1", ii, m1, ii == 0 ? 1 : 0);
    push("W(B)", "eps*prod", ii, mep, (n % 3 != 2 && ii == n / 3) ? 1 : 0);
    push("W(B)", "prod", ii, mp, 0);
    push("W(B)", "eps", ii, me, 0);
    // Frobenius reciprocity down to the index-two reflection subgroup
    push("W(D)", "1", ii, m1 + mp, ii == 0 ? 1 : 0);
    push("W(D)", "eps", ii, me + mep, (n % 3 != 2 && ii == n / 3) ? 1 : 0);
  }
  return rows;
}

SymA h1_induction_ch_a(int n) {
  if (n < 3) throw ParseError("h1_induction_ch_a requires n >= 3");
  const int N = n + 1;
  SymA part1 = symfunc::Exp(N).homogeneous_part(n - 2);
  SymA eps3 = symfunc::Exp(N).homogeneous_part(3).tilde();
  SymA ind = part1 * eps3;
  GradedChA a = type_a_graded_ch(n + 1);
  if (a.per_degree.size() < 2 || !(a.per_degree[1].retruncated(N) == ind))
    throw ConsistencyError("h1-induction-a",
                           "induced character disagrees with the graded degree-1 entry at n = " +
                               std::to_string(n));
  return ind;
}

SymB h1_induction_ch_b(int n) {
  if (n < 2) throw ParseError("h1_induction_ch_b requires n >= 2");
  const int N = n;
  SymB ind = one_dim_ch(n - 2, OneDimChar::Trivial, N) * one_dim_ch(2, OneDimChar::Eps, N);
  if (n >= 3)
    ind += one_dim_ch(n - 3, OneDimChar::Trivial, N) * ind_pm1_s3_ch(N);
  GradedChB b = type_b_graded_ch(n);
  if (b.per_degree.size() < 2 || !(b.per_degree[1].retruncated(N) == ind))
    throw ConsistencyError("h1-induction-b",
                           "induced character disagrees with the graded degree-1 entry at n = " +
                               std::to_string(n));
  return ind;
}

SymB h1_induction_ch_d(int n) {
  if (n < 3) throw ParseError("h1_induction_ch_d requires n >= 3");
  const int N = n;
  SymB ind = one_dim_ch(n - 3, OneDimChar::Trivial, N) * ind_pm1_s3_ch(N);
  GradedChB d = type_d_graded_ch(n);
  if (d.per_degree.size() < 2 || !(d.per_degree[1].retruncated(N) == ind))
    throw ConsistencyError("h1-induction-d",
                           "induced character disagrees with the graded degree-1 entry at n = " +
                               std::to_string(n));
  return ind;
}

}  // namespace dcp::charcalc
