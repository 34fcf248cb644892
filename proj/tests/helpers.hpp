#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "realdcp/even_poset.hpp"

namespace dcp::testing {

/// Literal breadth-first enumeration straight from the definition: frontier
/// elements are extended by closures with two extra hyperplanes, keeping the
/// closures of rank +2 whose components are all even. Independent of the
/// production two-phase enumerator; used to cross-check it on small types.
struct ReferencePoset {
  std::vector<std::pair<RootBitset, int>> elements;  // sorted (rank, roots)
  std::set<std::pair<int, int>> covers;
  std::vector<std::int64_t> mobius;
};

inline ReferencePoset reference_even_poset(const rootsys::RootSystem& rs) {
  flats::RootGeometry g(std::make_shared<rootsys::RootSystem>(rs));
  const int n = g.n();
  std::map<RootBitset, int> index;
  std::vector<std::pair<RootBitset, int>> els;
  std::set<std::pair<RootBitset, RootBitset>> cover_sets;

  els.push_back({RootBitset{}, 0});
  index.emplace(RootBitset{}, 0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int xi : frontier) {
      RootBitset xroots = els[xi].first;
      int xrank = els[xi].second;
      std::vector<int> seed;
      xroots.for_each([&](int r) { seed.push_back(r); });
      seed.push_back(-1);
      seed.push_back(-1);
      for (int a = 0; a < n; ++a) {
        if (xroots.test(a)) continue;
        for (int b = a + 1; b < n; ++b) {
          if (xroots.test(b)) continue;
          seed[seed.size() - 2] = a;
          seed[seed.size() - 1] = b;
          flats::Flat f = g.closure(seed);
          if (f.rank != xrank + 2 || !f.all_components_even()) continue;
          auto [it, fresh] = index.emplace(f.roots, static_cast<int>(els.size()));
          if (fresh) {
            els.push_back({f.roots, f.rank});
            next.push_back(it->second);
          }
          cover_sets.emplace(xroots, f.roots);
        }
      }
    }
    frontier = std::move(next);
  }

  ReferencePoset out;
  out.elements = els;
  std::sort(out.elements.begin(), out.elements.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  std::map<RootBitset, int> sorted_index;
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    sorted_index.emplace(out.elements[i].first, static_cast<int>(i));
  for (const auto& [lo, hi] : cover_sets)
    out.covers.emplace(sorted_index.at(lo), sorted_index.at(hi));

  // Moebius numbers by the textbook recursion over containment
  const std::size_t L = out.elements.size();
  out.mobius.assign(L, 0);
  out.mobius[0] = 1;
  for (std::size_t j = 1; j < L; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < j; ++i)
      if (out.elements[i].second < out.elements[j].second &&
          out.elements[i].first.subset_of(out.elements[j].first))
        s += out.mobius[i];
    out.mobius[j] = -s;
  }
  return out;
}

/// compares the production poset with the reference on elements, covers and
/// Moebius numbers
inline bool matches_reference(const flats::EvenPoset& p, const ReferencePoset& ref) {
  if (p.size() != ref.elements.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p.element(i).roots == ref.elements[i].first) ||
        p.element(i).rank != ref.elements[i].second)
      return false;
  if (p.mobius() != ref.mobius) return false;
  std::set<std::pair<int, int>> cov;
  for (const auto& [lo, hi] : p.covers()) cov.emplace(lo, hi);
  return cov == ref.covers;
}

}  // namespace dcp::testing
