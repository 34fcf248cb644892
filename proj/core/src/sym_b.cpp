#include "realdcp/sym_b.hpp"

#include <map>

namespace dcp::symfunc {

// x_m o g: p_j -> x_{mj}, s -> s^m
SymB pleth_x(int m, const SymA& g) {
  SymB r(g.truncation());
  for (const auto& [lam, c] : g.terms())
    r.set({lam.scaled(m), Partition{}}, c.scaled_exponents(m));
  return r;
}

// y_m o g: p_j -> x_{mj} (j even) / y_{mj} (j odd), s -> s^m
SymB pleth_y(int m, const SymA& g) {
  SymB r(g.truncation());
  for (const auto& [lam, c] : g.terms()) {
    Partition xs, ys;
    for (int j : lam.parts) (j % 2 == 0 ? xs : ys).parts.push_back(m * j);
    xs.normalize();
    ys.normalize();
    r.accumulate({xs, ys}, c.scaled_exponents(m));
  }
  return r;
}

SymB plethysm_b(const SymB& f, const SymA& g) {
  if (f.truncation() != g.truncation())
    throw TruncationMismatch("plethysm truncation mismatch");
  if (!g.constant_term().is_zero())
    throw Error("plethystic action requires zero constant term on the right");
  const int N = f.truncation();
  std::map<int, SymB> genx, geny;
  SymB out(N);
  for (const auto& [lm, c] : f.terms()) {
    SymB prod = SymB::one(N);
    bool dead = false;
    for (int m : lm.first.parts) {
      auto it = genx.find(m);
      if (it == genx.end()) it = genx.emplace(m, pleth_x(m, g)).first;
      prod = prod * it->second;
      if (prod.is_zero()) {
        dead = true;
        break;
      }
    }
    if (!dead)
      for (int m : lm.second.parts) {
        auto it = geny.find(m);
        if (it == geny.end()) it = geny.emplace(m, pleth_y(m, g)).first;
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

SymB mult_inverse(const SymB& f) {
  const int N = f.truncation();
  if (f.constant_term() != Laurent(1))
    throw Error("multiplicative inverse requires constant term 1");
  SymB u = f;
  u.set({Partition{}, Partition{}}, Laurent());
  SymB acc = SymB::one(N);
  SymB pw = SymB::one(N);
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

}  // namespace dcp::symfunc
