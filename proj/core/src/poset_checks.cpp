#include "realdcp/poset_checks.hpp"

#include <algorithm>

namespace dcp::flats {

std::vector<std::int64_t> mobius_oracle(const EvenPoset& p) {
  const std::size_t L = p.size();
  // zeta as per-element "strictly below" lists (containment of root sets)
  std::vector<std::vector<std::int32_t>> below(L);
  for (std::size_t j = 0; j < L; ++j)
    for (std::size_t i = 0; i < L; ++i)
      if (p.element(i).rank < p.element(j).rank &&
          p.element(i).roots.subset_of(p.element(j).roots))
        below[j].push_back(static_cast<std::int32_t>(i));

  // invert I + N column by column: solve (I + N) m = e_j by back substitution
  std::vector<std::int64_t> mu0(L, 0);
  std::vector<std::int64_t> m(L);
  for (std::size_t j = 0; j < L; ++j) {
    // interval [0, j]: m[i] = mu(i, j)
    std::fill(m.begin(), m.end(), 0);
    m[j] = 1;
    // elements strictly below j, highest rank first (indices descend in rank order)
    for (auto it = below[j].rbegin(); it != below[j].rend(); ++it) {
      std::int32_t i = *it;
      std::int64_t s = 1;  // zeta(i, j) * m[j]
      for (std::int32_t k : below[j]) {
        if (k <= i || m[k] == 0) continue;
        if (p.element(i).roots.subset_of(p.element(k).roots)) {
          if (__builtin_add_overflow(s, m[k], &s)) throw Error("overflow in zeta inversion");
        }
      }
      m[i] = -s;
    }
    mu0[j] = below[j].empty() ? (j == 0 ? 1 : m[0]) : m[0];
    if (j == 0) mu0[j] = 1;
  }

  for (std::size_t j = 0; j < L; ++j)
    if (mu0[j] != p.mobius()[j])
      throw ConsistencyError(
          "mobius-oracle",
          "element " + std::to_string(j) + " of " + p.type().name() + ": recursive mu = " +
              std::to_string(p.mobius()[j]) + ", zeta-inverse mu = " + std::to_string(mu0[j]));
  return mu0;
}

bool semimodularity_check(const EvenPoset& p) {
  const auto& cov = p.covers();
  std::vector<std::vector<std::int32_t>> ups(p.size());
  for (const auto& [lo, hi] : cov) ups[lo].push_back(hi);
  for (auto& u : ups) std::sort(u.begin(), u.end());
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto& u = ups[x];
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = a + 1; b < u.size(); ++b) {
        const auto& ua = ups[u[a]];
        const auto& ub = ups[u[b]];
        bool common = false;
        std::size_t i = 0, j = 0;
        while (i < ua.size() && j < ub.size()) {
          if (ua[i] == ub[j]) {
            common = true;
            break;
          }
          (ua[i] < ub[j] ? i : j)++;
        }
        if (!common && !(ua.empty() && ub.empty())) return false;
      }
  }
  return true;
}

DRelationResult d_relation_check(int n, const EnumOptions& opts) {
  if (n < 2) throw ParseError("d_relation_check requires n >= 2");
  DRelationResult r;
  if (n == 2) {
    // D2 = A1 x A1 is reducible; the reduction is stated for irreducible D_n
    r.applicable = false;
    return r;
  }
  auto chi = [&](const CoxeterType& t) {
    auto rs = rootsys::build_root_system(t);
    return enumerate_even_poset(rs, opts).char_poly();
  };
  r.lhs = chi(CoxeterType::D(n));
  CharPoly bn = chi(CoxeterType::B(n));
  CharPoly bn2 = chi(CoxeterType::B(n - 2));
  std::int64_t c = (static_cast<std::int64_t>(n) * (n - 1)) / 2;
  r.rhs = bn + bn2.shifted_scaled(c, 1);
  if (!(r.lhs == r.rhs))
    throw ConsistencyError("d-relation", "D" + std::to_string(n) + ": flats give " +
                                             r.lhs.str() + " but the B-side reduction gives " +
                                             r.rhs.str());
  return r;
}

}  // namespace dcp::flats
