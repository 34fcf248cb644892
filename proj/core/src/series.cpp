#include "realdcp/series.hpp"

namespace dcp::symfunc {

SymA Exp(int truncation) {
  SymA f(truncation);
  for (int n = 0; n <= truncation; ++n)
    for (const auto& lam : partitions_of(n))
      f.set(lam, Laurent(Rational(Integer(1), z_of(lam))));
  return f;
}

SymA Cosh(int truncation) {
  SymA f(truncation);
  const SymA e = Exp(truncation);
  for (const auto& [l, c] : e.terms())
    if (l.size() % 2 == 0) f.set(l, c);
  return f;
}

SymA Sinh(int truncation) {
  SymA f(truncation);
  const SymA e = Exp(truncation);
  for (const auto& [l, c] : e.terms())
    if (l.size() % 2 == 1) f.set(l, c);
  return f;
}

SymA Sech(int truncation) { return mult_inverse(Cosh(truncation)); }

SymA Arcsinh(int truncation) {
  // dedicated degree-by-degree inversion of Sinh, with the composition
  // evaluated in exponential form; agrees with plethystic_inverse(Sinh(N))
  SymA g = SymA::p(1, truncation);
  for (int d = 2; d <= truncation; ++d) g -= pleth_sinh(g).homogeneous_part(d);
  return g;
}

SymB ExpB(int truncation) {
  SymB f(truncation);
  for (int n = 0; n <= truncation; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& lam : partitions_of(k))
        for (const auto& mu : partitions_of(n - k)) {
          Integer den = (Integer(1) << lam.length()) * z_of(lam) *
                        (Integer(1) << mu.length()) * z_of(mu);
          f.set({lam, mu}, Laurent(Rational(Integer(1), den)));
        }
  return f;
}

SymB CoshB(int truncation) {
  SymB f(truncation);
  const SymB e = ExpB(truncation);
  for (const auto& [l, c] : e.terms())
    if ((l.first.size() + l.second.size()) % 2 == 0) f.set(l, c);
  return f;
}

SymB SinhB(int truncation) {
  SymB f(truncation);
  const SymB e = ExpB(truncation);
  for (const auto& [l, c] : e.terms())
    if ((l.first.size() + l.second.size()) % 2 == 1) f.set(l, c);
  return f;
}

SymB SechB(int truncation) { return mult_inverse(CoshB(truncation)); }

SymA exp_of(const SymA& h) {
  if (!h.constant_term().is_zero()) throw Error("exp_of requires zero constant term");
  const int N = h.truncation();
  SymA acc = SymA::one(N);
  SymA pw = SymA::one(N);
  Rational fac = 1;
  for (int k = 1; k <= N; ++k) {
    pw = pw * h;
    if (pw.is_zero()) break;
    fac /= k;
    acc += Laurent(fac) * pw;
  }
  return acc;
}

SymB exp_of(const SymB& h) {
  if (!h.constant_term().is_zero()) throw Error("exp_of requires zero constant term");
  const int N = h.truncation();
  SymB acc = SymB::one(N);
  SymB pw = SymB::one(N);
  Rational fac = 1;
  for (int k = 1; k <= N; ++k) {
    pw = pw * h;
    if (pw.is_zero()) break;
    fac /= k;
    acc += Laurent(fac) * pw;
  }
  return acc;
}

namespace {
void require_zero_constant(const SymA& g) {
  if (!g.constant_term().is_zero())
    throw Error("plethystic action requires zero constant term on the right");
}
void require_odd(const SymA& g) {
  for (const auto& [lam, c] : g.terms())
    if (lam.size() % 2 == 0)
      throw Error("this composition requires an odd-degree-only right argument");
}
}  // namespace

namespace {

// exp(sum_m e^m (p_m o g)/m) with e = +1 or -1; the sign e = -1 realizes
// composing Exp with g scaled by a formal degree marker set to -1, i.e.
// sum_n (-1)^n Exp_n o g, which is what the even/odd splits need.
SymA exp_pleth_a_signed(const SymA& g, int e) {
  const int N = g.truncation();
  SymA h(N);
  for (int m = 1; m <= N; ++m) {
    SymA pm = pleth_p(m, g);
    if (pm.is_zero()) continue;
    Rational c(e == -1 && (m % 2) ? -1 : 1, m);
    h += Laurent(c) * pm;
  }
  return exp_of(h);
}

SymB exp_pleth_b_signed(const SymA& g, int e) {
  const int N = g.truncation();
  SymB h(N);
  for (int m = 1; m <= N; ++m) {
    SymB xm = pleth_x(m, g);
    SymB ym = pleth_y(m, g);
    if (xm.is_zero() && ym.is_zero()) continue;
    Rational c(e == -1 && (m % 2) ? -1 : 1, 2 * m);
    h += Laurent(c) * (xm + ym);
  }
  return exp_of(h);
}

}  // namespace

SymA pleth_exp_a(const SymA& g) {
  require_zero_constant(g);
  return exp_pleth_a_signed(g, +1);
}

SymA pleth_cosh(const SymA& g) {
  require_zero_constant(g);
  SymA e1 = exp_pleth_a_signed(g, +1);
  SymA e2 = exp_pleth_a_signed(g, -1);
  return Laurent(Rational(1, 2)) * (e1 + e2);
}

SymA pleth_sinh(const SymA& g) {
  require_zero_constant(g);
  SymA e1 = exp_pleth_a_signed(g, +1);
  SymA e2 = exp_pleth_a_signed(g, -1);
  return Laurent(Rational(1, 2)) * (e1 - e2);
}

SymB pleth_exp_b(const SymA& g) {
  require_zero_constant(g);
  return exp_pleth_b_signed(g, +1);
}

SymB pleth_cosh_b(const SymA& g) {
  require_zero_constant(g);
  SymB e1 = exp_pleth_b_signed(g, +1);
  SymB e2 = exp_pleth_b_signed(g, -1);
  return Laurent(Rational(1, 2)) * (e1 + e2);
}

SymA pleth_sech_tilde(const SymA& g) {
  require_odd(g);
  return mult_inverse(pleth_cosh(g.tilde())).tilde();
}

SymB pleth_sech_b_tilde(const SymA& g) {
  require_odd(g);
  return mult_inverse(pleth_cosh_b(g.tilde())).tilde();
}

}  // namespace dcp::symfunc
