#include "realdcp/sym_a.hpp"

#include <map>

namespace dcp::symfunc {

SymA pleth_p(int m, const SymA& g) {
  SymA r(g.truncation());
  for (const auto& [lam, c] : g.terms()) r.set(lam.scaled(m), c.scaled_exponents(m));
  return r;
}

SymA plethysm(const SymA& f, const SymA& g) {
  if (f.truncation() != g.truncation())
    throw TruncationMismatch("plethysm truncation mismatch");
  if (!g.constant_term().is_zero())
    throw Error("plethysm requires zero constant term on the right");
  const int N = f.truncation();
  std::map<int, SymA> gen;  // m -> p_m o g
  SymA out(N);
  for (const auto& [lam, c] : f.terms()) {
    SymA prod = SymA::one(N);
    bool dead = false;
    for (int m : lam.parts) {
      auto it = gen.find(m);
      if (it == gen.end()) it = gen.emplace(m, pleth_p(m, g)).first;
      prod = prod * it->second;
      if (prod.is_zero()) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    out += c * prod;
  }
  return out;
}

SymA plethystic_inverse(const SymA& f) {
  const int N = f.truncation();
  if (!f.constant_term().is_zero())
    throw Error("plethystic inverse requires zero constant term");
  if (f.homogeneous_part(1) != SymA::p(1, N))
    throw Error("plethystic inverse requires degree-1 part p[1]");
  SymA g = SymA::p(1, N);
  for (int d = 2; d <= N; ++d) {
    SymA err = plethysm(f, g).homogeneous_part(d);
    g -= err;  // only the p_1-term of f touches degree d of g
  }
  return g;
}

SymA mult_inverse(const SymA& f) {
  const int N = f.truncation();
  if (f.constant_term() != Laurent(1))
    throw Error("multiplicative inverse requires constant term 1");
  SymA u = f;
  u.set(Partition{}, Laurent());
  SymA acc = SymA::one(N);
  SymA pw = SymA::one(N);
  for (int k = 1; k <= N; ++k) {
    pw = pw * u;
    if (pw.is_zero()) break;
    if (k % 2)
      acc -= pw;
    else
      acc += pw;
  }
  return acc;
}

std::vector<Laurent> substitute_powers(const SymA& f) {
  std::vector<Laurent> out(f.truncation() + 1);
  for (const auto& [lam, c] : f.terms()) out[lam.size()] += c;
  return out;
}

}  // namespace dcp::symfunc
