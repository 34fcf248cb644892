#include "realdcp/schur.hpp"

#include <algorithm>

namespace dcp::symfunc {

namespace {

Rational s_free(const Laurent& c) {
  for (const auto& [k, v] : c.terms())
    if (k != 0) throw Error("expected s-free coefficient, got " + c.str());
  return c.coeff(0);
}

// beta numbers b_i = lam_i + L - 1 - i
std::vector<int> beta_of(const Partition& lam) {
  int L = lam.length();
  std::vector<int> b(L);
  for (int i = 0; i < L; ++i) b[i] = lam.parts[i] + L - 1 - i;
  return b;
}

Partition partition_of_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  Partition lam;
  int L = static_cast<int>(b.size());
  for (int i = 0; i < L; ++i) lam.parts.push_back(b[i] - (L - 1 - i));
  lam.normalize();
  return lam;
}

std::int64_t mn(const Partition& lam, const std::vector<int>& mu, std::size_t k) {
  if (k == mu.size()) return lam.empty() ? 1 : 0;
  const int r = mu[k];
  std::vector<int> beta = beta_of(lam);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int t = beta[i] - r;
    if (t < 0) continue;
    if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > t && b < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = t;
    std::int64_t sub = mn(partition_of_beta(std::move(nb)), mu, k + 1);
    total += (height % 2) ? -sub : sub;
  }
  return total;
}

}  // namespace

std::int64_t sn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw Error("character of mismatched sizes");
  // largest parts first keeps the recursion shallow
  return mn(lambda, mu.parts, 0);
}

std::map<Partition, Rational> schur_multiplicities(const SymA& f, int n) {
  std::map<Partition, Rational> out;
  const auto alphas = partitions_of(n);
  for (const auto& [mu, c] : f.terms()) {
    if (mu.size() != n) throw Error("schur_multiplicities requires a homogeneous input");
    Rational v = s_free(c);
    for (const auto& a : alphas) {
      std::int64_t chi = sn_character(a, mu);
      if (chi != 0) out[a] += v * chi;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<PartitionPair, Rational> double_schur_multiplicities(const SymB& f, int n) {
  // change of basis x_i = sigma_i + tau_i, y_i = sigma_i - tau_i; in the
  // (sigma, tau) coordinates the ring splits as two independent power-sum
  // rings with the plain z norms, and irreducibles are s_alpha[sigma] s_beta[tau]
  std::map<PartitionPair, Rational> st;  // coefficients in sigma/tau monomials
  for (const auto& [lm, c] : f.terms()) {
    if (lm.first.size() + lm.second.size() != n)
      throw Error("double_schur_multiplicities requires a homogeneous input");
    Rational v = s_free(c);
    std::vector<int> all;
    std::vector<bool> from_y;
    for (int p : lm.first.parts) {
      all.push_back(p);
      from_y.push_back(false);
    }
    for (int p : lm.second.parts) {
      all.push_back(p);
      from_y.push_back(true);
    }
    const std::size_t L = all.size();
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
      Partition sig, tau;
      int neg = 0;  // each y-part sent to tau contributes a -1
      for (std::size_t i = 0; i < L; ++i) {
        if (mask & (1u << i)) {
          tau.parts.push_back(all[i]);
          if (from_y[i]) ++neg;
        } else {
          sig.parts.push_back(all[i]);
        }
      }
      sig.normalize();
      tau.normalize();
      Rational add = neg % 2 ? -v : v;
      auto [it, fresh] = st.emplace(PartitionPair{sig, tau}, add);
      if (!fresh) it->second += add;
    }
  }
  std::map<PartitionPair, Rational> out;
  // multiplicities: sum over (lambda, mu) of c * chi^alpha(lambda) chi^beta(mu)
  for (int k = 0; k <= n; ++k) {
    for (const auto& alpha : partitions_of(k))
      for (const auto& beta : partitions_of(n - k)) {
        Rational m = 0;
        for (const auto& [lm, c] : st) {
          if (c == 0) continue;
          if (lm.first.size() != k || lm.second.size() != n - k) continue;
          std::int64_t ca = sn_character(alpha, lm.first);
          if (ca == 0) continue;
          std::int64_t cb = sn_character(beta, lm.second);
          if (cb == 0) continue;
          m += c * ca * cb;
        }
        if (m != 0) out[{alpha, beta}] = m;
      }
  }
  return out;
}

bool is_character(const SymA& f, int n) {
  for (const auto& [a, m] : schur_multiplicities(f, n))
    if (!is_integer(m) || m < 0) return false;
  return true;
}

bool is_character(const SymB& f, int n) {
  for (const auto& [ab, m] : double_schur_multiplicities(f, n))
    if (!is_integer(m) || m < 0) return false;
  return true;
}

}  // namespace dcp::symfunc
