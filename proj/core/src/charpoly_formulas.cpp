#include "realdcp/charpoly_formulas.hpp"

#include <vector>

namespace dcp::flats {

using symfunc::Laurent;

namespace {

std::int64_t to_i64(const Integer& v, const char* what) {
  if (!v.fits_slong_p()) throw Error(std::string("overflow in ") + what);
  return v.get_si();
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

CharPoly to_charpoly(const std::vector<Integer>& v) {
  CharPoly p;
  for (const auto& c : v) p.coeffs.push_back(to_i64(c, "characteristic polynomial"));
  while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

// truncated power series in x with Laurent-in-s coefficients
using Series = std::vector<Laurent>;

Series series_mul(const Series& a, const Series& b, int nmax) {
  Series r(nmax + 1);
  for (int i = 0; i <= nmax; ++i)
    for (int j = 0; i + j <= nmax && j < static_cast<int>(b.size()); ++j) {
      if (i >= static_cast<int>(a.size())) break;
      r[i + j] += a[i] * b[j];
    }
  return r;
}

// f(series) for f given by Taylor coefficients f_k, series with zero constant term
Series series_compose(const std::vector<Rational>& f, const Series& g, int nmax) {
  Series acc(nmax + 1);
  acc[0] = Laurent(f[0]);
  Series gpow(nmax + 1);
  gpow[0] = Laurent(1);
  for (std::size_t k = 1; k < f.size() && static_cast<int>(k) <= nmax; ++k) {
    gpow = series_mul(gpow, g, nmax);
    if (f[k] == 0) continue;
    for (int i = 0; i <= nmax; ++i) acc[i] += f[k] * gpow[i];
  }
  return acc;
}

// arcsinh(s x) as a series in x: sum (-1)^k C(2k,k)/(4^k (2k+1)) s^{2k+1} x^{2k+1}
Series arcsinh_sx(int nmax) {
  Series g(nmax + 1);
  for (int k = 0; 2 * k + 1 <= nmax; ++k) {
    Rational c(binomial(2 * k, k));
    c /= Rational(pow_rational(Rational(4), k));
    c /= 2 * k + 1;
    if (k % 2) c = -c;
    g[2 * k + 1] = Laurent::s_power(2 * k + 1, c);
  }
  return g;
}

std::vector<Rational> taylor_exp(int nmax) {
  std::vector<Rational> f(nmax + 1);
  Rational fac = 1;
  f[0] = 1;
  for (int k = 1; k <= nmax; ++k) {
    fac /= k;
    f[k] = fac;
  }
  return f;
}

std::vector<Rational> taylor_cosh(int nmax) {
  auto f = taylor_exp(nmax);
  for (int k = 1; k <= nmax; k += 2) f[k] = 0;
  return f;
}

Series series_inverse(const Series& a, int nmax) {
  if (!(a[0] == Laurent(1))) throw Error("series inverse needs constant term 1");
  // 1/(1+v) = sum (-v)^k
  Series v = a;
  v[0] = Laurent();
  Series acc(nmax + 1), pw(nmax + 1);
  acc[0] = Laurent(1);
  pw[0] = Laurent(1);
  for (int k = 1; k <= nmax; ++k) {
    pw = series_mul(pw, v, nmax);
    for (int i = 0; i <= nmax; ++i) {
      if (k % 2)
        acc[i] -= pw[i];
      else
        acc[i] += pw[i];
    }
  }
  return acc;
}

Series sech_half_arcsinh(int nmax) {
  Series u = arcsinh_sx(nmax);
  for (auto& c : u) c = Rational(1, 2) * c;
  Series ch = series_compose(taylor_cosh(nmax), u, nmax);
  return series_inverse(ch, nmax);
}

Series exp_half_arcsinh(int nmax) {
  // (1/(2s)) arcsinh(s x)
  Series v = arcsinh_sx(nmax);
  for (auto& c : v) c = Rational(1, 2) * c.scaled_exponents(1), c = c * Laurent::s_power(-1);
  return series_compose(taylor_exp(nmax), v, nmax);
}

}  // namespace

CharPoly type_a_charpoly_formula(int n) {
  if (n < 1) throw ParseError("type A requires n >= 1");
  std::vector<Integer> acc{Integer(1)};
  for (int k = 1; k <= n / 2; ++k) {
    Integer a(n + 1 - 2 * k);
    acc = poly_mul(acc, {Integer(1), -a * a});
  }
  return to_charpoly(acc);
}

CharPoly type_b_charpoly_formula(int n) {
  if (n < 2) {
    if (n < 0) throw ParseError("type B requires n >= 0");
    return CharPoly{{1}};  // B0, B1: only the trivial flat
  }
  std::vector<Integer> total{Integer(0)};
  total.resize(n / 2 + 1, Integer(0));
  for (int m = 0; m <= n / 2; ++m) {
    // binom(n, 2m) * (4m)! / (2^(2m) (2m+1)!) * (-t)^m * prod (1 - 4 a^2 t)
    Integer c = binomial(n, 2 * m) * factorial(4 * m);
    Integer den = Integer(1) << (2 * m);
    den *= factorial(2 * m + 1);
    if (c % den != 0) throw Error("non-integral coefficient in B closed form");
    c /= den;
    if (m % 2) c = -c;
    std::vector<Integer> term{c};
    for (int a = (n % 2 == 0 ? 2 : 1); a <= n - 2 * m - 2; a += 2)
      term = poly_mul(term, {Integer(1), Integer(-4) * a * a});
    for (std::size_t i = 0; i < term.size(); ++i) {
      std::size_t k = i + m;
      if (k >= total.size()) total.resize(k + 1, Integer(0));
      total[k] += term[i];
    }
  }
  return to_charpoly(total);
}

CharPoly type_d_charpoly_formula(int n) {
  if (n < 3) throw ParseError("the D reduction formula needs n >= 3");
  CharPoly bn = type_b_charpoly_formula(n);
  CharPoly bn2 = type_b_charpoly_formula(n - 2);
  return bn + bn2.shifted_scaled(static_cast<std::int64_t>(n) * (n - 1) / 2, 1);
}

namespace {
std::int64_t signed_ratio(const Integer& num, const Integer& den, int sign_exp,
                          const char* what) {
  if (num % den != 0) throw Error(std::string("non-integral Euler closed form for ") + what);
  Integer v = num / den;
  if (sign_exp % 2) v = -v;
  return to_i64(v, what);
}
}  // namespace

std::int64_t type_a_euler_closed_form(int n) {
  if (n % 2 == 0) throw ParseError("closed-form Euler characteristic: odd n only");
  Integer num = factorial(n + 1) * factorial(n - 1);
  Integer den = (Integer(1) << n) * factorial((n + 1) / 2) * factorial((n - 1) / 2);
  return signed_ratio(num, den, (n - 1) / 2, "A");
}

std::int64_t type_b_euler_closed_form(int n) {
  if (n % 2 == 0) throw ParseError("closed-form Euler characteristic: odd n only");
  Integer num = factorial(n) * factorial(n - 1);
  Integer den = factorial((n + 1) / 2) * factorial((n - 1) / 2);
  return signed_ratio(num, den, (n - 1) / 2, "B");
}

std::int64_t type_d_euler_closed_form(int n) {
  if (n % 2 == 0 || n < 3) throw ParseError("closed-form Euler characteristic: odd n >= 3 only");
  Integer num = Integer(n - 1) * Integer(7 * n - 17) * factorial(n) * factorial(n - 3);
  Integer den = Integer(8) * factorial((n + 1) / 2) * factorial((n - 1) / 2);
  return signed_ratio(num, den, (n - 1) / 2, "D");
}

std::vector<CharPoly> type_b_charpoly_series(int nmax) {
  Series prod = series_mul(sech_half_arcsinh(nmax), exp_half_arcsinh(nmax), nmax);
  std::vector<CharPoly> out;
  Integer two_n_fact = 1;  // 2^n n!
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) two_n_fact *= 2 * n;
    const Laurent& c = prod[n];
    if (!c.only_even_exponents())
      throw ConsistencyError("b-series", "odd s-exponent in the degree-" + std::to_string(n) +
                                             " term of the B generating function");
    CharPoly p;
    if (n <= 1) {
      p.coeffs = {1};  // the formula's low-degree terms 1 and x/2
      out.push_back(p);
      continue;
    }
    int kmax = c.max_exponent() / 2;
    p.coeffs.assign(kmax + 1, 0);
    for (int k = 0; k <= kmax; ++k) {
      Rational v = c.coeff(2 * k) * Rational(two_n_fact);
      if (!is_integer(v))
        throw ConsistencyError("b-series", "non-integral coefficient in chi(B_n)");
      p.coeffs[k] = to_int64(v);
    }
    out.push_back(p);
  }
  return out;
}

Laurent sech_half_arcsinh_coeff(int n) { return sech_half_arcsinh(n)[n]; }
Laurent exp_half_arcsinh_coeff(int n) { return exp_half_arcsinh(n)[n]; }

}  // namespace dcp::flats
