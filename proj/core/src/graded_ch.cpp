#include "realdcp/graded_ch.hpp"

namespace dcp::charcalc {

using symfunc::Arcsinh;
using symfunc::ExpB;
using symfunc::Laurent;
using symfunc::SechB;
using symfunc::plethysm;
using symfunc::plethysm_b;

namespace {

// t^{1/2} p_1 = s p_1
SymA sp1(int N) { return SymA::monomial(Partition{1}, Laurent::s_power(1), N); }

// split a homogeneous degree-n slice by powers of t = s^2 with sign (-t)^i
template <class Sym, class SetTerm>
void split_by_degree(const Sym& slice, int n, std::vector<int>& top, SetTerm&& set_term) {
  for (const auto& [key, c] : slice.terms()) {
    for (const auto& [k, v] : c.terms()) {
      if (k < 0 || k % 2 != 0)
        throw ConsistencyError("half-integer-cancellation",
                               "stray s-exponent " + std::to_string(k) +
                                   " in the degree-" + std::to_string(n) + " term");
      int i = k / 2;
      top[0] = std::max(top[0], i);
      set_term(key, i, (i % 2) ? -v : v);
    }
  }
}

GradedChA extract_a(const SymA& rhs, int n) {
  GradedChA out;
  out.n = n;
  SymA slice = rhs.homogeneous_part(n);
  std::vector<int> top{0};
  std::vector<std::map<Partition, Rational>> buckets;
  split_by_degree(slice, n, top, [&](const Partition& lam, int i, const Rational& v) {
    if (static_cast<int>(buckets.size()) <= i) buckets.resize(i + 1);
    buckets[i][lam] += v;
  });
  out.per_degree.assign(buckets.size(), SymA(n));
  for (std::size_t i = 0; i < buckets.size(); ++i)
    for (const auto& [lam, v] : buckets[i]) out.per_degree[i].set(lam, Laurent(v));
  if (out.per_degree.empty()) out.per_degree.push_back(SymA(n));
  return out;
}

GradedChB extract_b(const SymB& rhs, int n) {
  GradedChB out;
  out.n = n;
  SymB slice = rhs.homogeneous_part(n);
  std::vector<int> top{0};
  std::vector<std::map<PartitionPair, Rational>> buckets;
  split_by_degree(slice, n, top, [&](const PartitionPair& lm, int i, const Rational& v) {
    if (static_cast<int>(buckets.size()) <= i) buckets.resize(i + 1);
    buckets[i][lm] += v;
  });
  out.per_degree.assign(buckets.size(), SymB(n));
  for (std::size_t i = 0; i < buckets.size(); ++i)
    for (const auto& [lm, v] : buckets[i]) out.per_degree[i].set(lm, Laurent(v));
  if (out.per_degree.empty()) out.per_degree.push_back(SymB(n));
  return out;
}

std::int64_t dim_from(const Rational& coeff, const Integer& group_order) {
  Rational d = coeff * group_order;
  if (!is_integer(d) || d < 0) throw Error("graded character has a bad dimension");
  return to_int64(d);
}

SymB type_b_rhs(int n, int N) {
  SymA as = Arcsinh(N).tilde();
  SymA inner = plethysm(as, sp1(N));                       // Arcsinh~ o t^{1/2} p_1
  SymA inner_shift = Laurent::s_power(-1) * inner;         // t^{-1/2} (...)
  SymB f1 = symfunc::pleth_sech_b_tilde(inner);
  SymB f2 = symfunc::pleth_exp_b(inner_shift);
  (void)n;
  return f1 * f2;
}

}  // namespace

std::vector<std::int64_t> GradedChA::dims() const {
  std::vector<std::int64_t> d;
  Partition ones(std::vector<int>(n, 1));
  Integer order = dcp::factorial(n);
  for (const auto& f : per_degree) d.push_back(dim_from(f.coeff(ones).coeff(0), order));
  return d;
}

std::vector<std::int64_t> GradedChB::dims() const {
  std::vector<std::int64_t> d;
  PartitionPair ones{Partition(std::vector<int>(n, 1)), Partition{}};
  Integer order = dcp::factorial(n) << n;
  for (const auto& f : per_degree) d.push_back(dim_from(f.coeff(ones).coeff(0), order));
  return d;
}

GradedChA type_a_graded_ch(int n) {
  if (n < 1) throw ParseError("type_a_graded_ch requires n >= 1");
  const int N = n + 2;
  SymA as = Arcsinh(N).tilde();
  SymA inner_shift = Laurent::s_power(-1) * plethysm(as, sp1(N));
  SymA rhs = symfunc::pleth_exp_a(inner_shift);
  return extract_a(rhs, n);
}

GradedChB type_b_graded_ch(int n) {
  if (n < 1) throw ParseError("type_b_graded_ch requires n >= 1");
  const int N = n + 2;
  return extract_b(type_b_rhs(n, N), n);
}

GradedChB type_d_graded_ch(int n) {
  if (n < 2) throw ParseError("type_d_graded_ch requires n >= 2");
  const int N = n + 2;
  GradedChB bn = extract_b(type_b_rhs(n, N), n);
  // characteristic of the B_{n-2} tower at the same truncation
  GradedChB bn2;
  bn2.n = n - 2;
  if (n == 2) {
    bn2.per_degree.assign(1, SymB::one(N));  // the model of the empty type is a point
  } else {
    bn2 = extract_b(type_b_rhs(n - 2, N), n - 2);
    for (auto& f : bn2.per_degree) {
      SymB lifted(N);
      for (const auto& [lm, c] : f.terms()) lifted.set(lm, c);
      f = lifted;
    }
  }
  SymB eps2 = one_dim_ch(2, OneDimChar::Eps, N);
  GradedChB out;
  out.n = n;
  out.per_degree.assign(bn.per_degree.size(), SymB(n));
  for (std::size_t i = 0; i < bn.per_degree.size(); ++i) {
    SymB v(N);
    for (const auto& [lm, c] : bn.per_degree[i].terms()) v.set(lm, c);
    if (i >= 1 && i - 1 < bn2.per_degree.size()) v -= bn2.per_degree[i - 1] * eps2;
    SymB w(n);
    for (const auto& [lm, c] : v.terms()) w.set(lm, c);
    if (!symfunc::is_character(w, n))
      throw ConsistencyError("typed-positivity",
                             "degree-" + std::to_string(i) + " entry of the D" +
                                 std::to_string(n) + " character has a negative multiplicity");
    out.per_degree[i] = std::move(w);
  }
  return out;
}

GradedChA gamma_invariant_ch(int n) {
  GradedChB b = type_b_graded_ch(n);
  GradedChA out;
  out.n = n;
  for (const auto& f : b.per_degree) out.per_degree.push_back(f.substitute_to_a(+1, +1));
  return out;
}

GradedChA gamma_prod_ch(int n) {
  GradedChB b = type_b_graded_ch(n);
  GradedChA out;
  out.n = n;
  for (const auto& f : b.per_degree) out.per_degree.push_back(f.substitute_to_a(+1, -1));
  return out;
}

const char* one_dim_name(OneDimChar c) {
  switch (c) {
    case OneDimChar::Trivial: return "1";
    case OneDimChar::Eps: return "eps";
    case OneDimChar::Prod: return "prod";
    case OneDimChar::EpsProd: return "eps*prod";
  }
  return "?";
}

SymB one_dim_ch(int n, OneDimChar which, int truncation) {
  if (n < 0) throw ParseError("one_dim_ch requires n >= 0");
  const int N = truncation < 0 ? n : truncation;
  SymB f = ExpB(std::max(N, n)).homogeneous_part(n);
  SymB g(N);
  switch (which) {
    case OneDimChar::Trivial: break;
    case OneDimChar::Eps: f = f.tilde(); break;
    case OneDimChar::Prod: f = f.flip_y(); break;
    case OneDimChar::EpsProd: f = f.tilde().flip_y(); break;
  }
  for (const auto& [lm, c] : f.terms()) g.set(lm, c);
  return g;
}

}  // namespace dcp::charcalc
