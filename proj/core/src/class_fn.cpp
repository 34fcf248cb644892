#include "realdcp/class_fn.hpp"

namespace dcp::charcalc {

using symfunc::Laurent;
using symfunc::partitions_of;
using symfunc::z_of;

std::vector<PartitionPair> b_class_labels(int n) {
  std::vector<PartitionPair> out;
  for (int k = n; k >= 0; --k)
    for (const auto& lam : partitions_of(k))
      for (const auto& mu : partitions_of(n - k)) out.push_back({lam, mu});
  return out;
}

Integer b_centralizer_order(const PartitionPair& cls) {
  return (z_of(cls.first) << cls.first.length()) * (z_of(cls.second) << cls.second.length());
}

namespace {
Rational s_free(const Laurent& c) {
  for (const auto& [k, v] : c.terms())
    if (k != 0) throw Error("class function of a non-s-free characteristic");
  return c.coeff(0);
}
}  // namespace

BClassFunction class_function(const SymB& ch, int n) {
  BClassFunction f;
  f.n = n;
  for (const auto& cls : b_class_labels(n)) {
    Rational v = s_free(ch.coeff(cls)) * b_centralizer_order(cls);
    f.values[cls] = v;
  }
  // nothing outside degree n may appear
  for (const auto& [lm, c] : ch.terms())
    if (lm.first.size() + lm.second.size() != n)
      throw Error("class_function requires a homogeneous degree-n characteristic");
  return f;
}

SymB ch_from_class_function(const BClassFunction& f, int truncation) {
  SymB ch(truncation);
  for (const auto& [cls, v] : f.values)
    ch.accumulate(cls, Laurent(v / Rational(b_centralizer_order(cls))));
  return ch;
}

Rational inner_product_b(const SymB& f, const SymB& g, int n) {
  Rational s = 0;
  for (const auto& [lm, c] : f.terms()) {
    if (lm.first.size() + lm.second.size() != n) continue;
    Rational cg = s_free(g.coeff(lm));
    if (cg == 0) continue;
    s += s_free(c) * cg * b_centralizer_order(lm);
  }
  return s;
}

BClassFunction euler_character_b(int n) {
  if (n < 1) throw ParseError("euler_character_b requires n >= 1");
  const int N = n + 2;
  SymA as = symfunc::Arcsinh(N).tilde();
  SymB route1 = symfunc::pleth_sech_b_tilde(as) * symfunc::pleth_exp_b(as);
  SymB slice = route1.homogeneous_part(n).retruncated(n);
  BClassFunction e1 = class_function(slice, n);

  GradedChB b = type_b_graded_ch(n);
  SymB alt(n);
  for (std::size_t i = 0; i < b.per_degree.size(); ++i) {
    if (i % 2)
      alt -= b.per_degree[i];
    else
      alt += b.per_degree[i];
  }
  BClassFunction e2 = class_function(alt, n);
  if (!(e1 == e2))
    throw ConsistencyError("euler-character",
                           "s = 1 specialization disagrees with the alternating sum of graded "
                           "class functions at n = " + std::to_string(n));
  return e1;
}

}  // namespace dcp::charcalc
