#include <algorithm>

#include "realdcp/even_poset.hpp"

namespace dcp::flats {

// Lower covers of an element: replace exactly one component C by an even
// flat of corank 2 inside C (the empty flat when C has rank 2). This is the
// product structure of lower order ideals; purity makes every such pair a
// genuine cover and there are no others.
void EvenPoset::materialize_covers() const {
  if (covers_done_) return;
  if (elements_.size() == 1) {
    covers_done_ = true;
    return;
  }
  if (iefs_.empty())
    throw Error("covers unavailable: poset carries no component table");

  // rank bands over the rank-sorted element list
  std::vector<std::size_t> band_begin;
  std::vector<int> band_rank;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (i == 0 || elements_[i].rank != elements_[i - 1].rank) {
      band_begin.push_back(i);
      band_rank.push_back(elements_[i].rank);
    }
  band_begin.push_back(elements_.size());
  auto band_of = [&](int rank) -> std::pair<std::size_t, std::size_t> {
    for (std::size_t b = 0; b < band_rank.size(); ++b)
      if (band_rank[b] == rank) return {band_begin[b], band_begin[b + 1]};
    return {0, 0};
  };

  std::vector<std::vector<std::int32_t>> by_comp(iefs_.size());
  for (std::size_t e = 0; e < elements_.size(); ++e)
    for (auto c : elements_[e].comps) by_comp[c].push_back(static_cast<std::int32_t>(e));

  for (std::size_t c = 0; c < iefs_.size(); ++c) {
    if (by_comp[c].empty()) continue;
    std::vector<RootBitset> lower;
    if (iefs_[c].rank == 2) {
      lower.push_back(RootBitset{});
    } else {
      auto [lo, hi] = band_of(iefs_[c].rank - 2);
      for (std::size_t i = lo; i < hi; ++i)
        if (elements_[i].roots.subset_of(iefs_[c].roots)) lower.push_back(elements_[i].roots);
    }
    for (auto e : by_comp[c]) {
      RootBitset base = elements_[e].roots.minus(iefs_[c].roots);
      for (const auto& s : lower) {
        std::size_t x = index_of(base | s);
        covers_.emplace_back(static_cast<std::int32_t>(x), e);
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
  covers_done_ = true;
}

}  // namespace dcp::flats
