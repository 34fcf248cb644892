#include "realdcp/dowling.hpp"

#include <algorithm>
#include <map>

#include "realdcp/root_system.hpp"

namespace dcp::flats {

namespace {

using rootsys::Scalar;
using rootsys::ScalarVec;

struct RootIndexer {
  rootsys::RootSystem rs;
  std::map<std::pair<int, int>, int> plus_idx, minus_idx;  // x_i - x_j / x_i + x_j, i < j
  std::map<int, int> coord_idx;                            // x_i

  explicit RootIndexer(int n) : rs(rootsys::build_root_system(CoxeterType::B(n))) {
    auto find = [&](const ScalarVec& v) {
      auto it = std::lower_bound(rs.positive_roots.begin(), rs.positive_roots.end(), v,
                                 rootsys::lex_less);
      if (it == rs.positive_roots.end() || !(*it == v)) throw Error("root lookup failed");
      return static_cast<int>(it - rs.positive_roots.begin());
    };
    for (int i = 0; i < n; ++i) {
      ScalarVec v(n, Scalar(0));
      v[i] = Scalar(1);
      coord_idx[i] = find(v);
      for (int j = i + 1; j < n; ++j) {
        v[j] = Scalar(-1);
        minus_idx[{i, j}] = find(v);
        v[j] = Scalar(1);
        plus_idx[{i, j}] = find(v);
        v[j] = Scalar(0);
      }
    }
  }
};

struct SignedBlock {
  std::vector<int> members;  // ascending
  unsigned signs = 0;        // bit k = sign of members[k]; bit 0 always +
};

struct DElement {
  unsigned i_set = 0;  // coordinates of the sign-flip block
  std::vector<SignedBlock> blocks;
  int rank = 0;
  RootBitset roots;
};

void block_roots(const RootIndexer& ix, const SignedBlock& b, RootBitset& out) {
  for (std::size_t a = 0; a < b.members.size(); ++a)
    for (std::size_t c = a + 1; c < b.members.size(); ++c) {
      bool same = ((b.signs >> a) & 1) == ((b.signs >> c) & 1);
      int idx = same ? ix.minus_idx.at({b.members[a], b.members[c]})
                     : ix.plus_idx.at({b.members[a], b.members[c]});
      out.set(idx);
    }
}

RootBitset element_roots(const RootIndexer& ix, int n, const DElement& e) {
  RootBitset out;
  for (int i = 0; i < n; ++i)
    if (e.i_set & (1u << i)) {
      out.set(ix.coord_idx.at(i));
      for (int j = i + 1; j < n; ++j)
        if (e.i_set & (1u << j)) {
          out.set(ix.minus_idx.at({i, j}));
          out.set(ix.plus_idx.at({i, j}));
        }
    }
  for (const auto& b : e.blocks) block_roots(ix, b, out);
  return out;
}

// all collections of disjoint signed odd blocks (size >= 3) inside `free`
void gen_blocks(int n, unsigned free, int min_elem, std::vector<SignedBlock>& cur,
                const std::function<void(const std::vector<SignedBlock>&)>& emit) {
  emit(cur);
  for (int e = min_elem; e < n; ++e) {
    if (!(free & (1u << e))) continue;
    // blocks containing e, drawn from elements above... any elements of free > nothing:
    // to enumerate each collection once, e is the smallest element of the next block
    unsigned rest = free & ~((1u << (e + 1)) - 1);  // elements > e
    std::vector<int> pool;
    for (int j = e + 1; j < n; ++j)
      if (rest & (1u << j)) pool.push_back(j);
    int m = static_cast<int>(pool.size());
    for (unsigned pick = 0; pick < (1u << m); ++pick) {
      int cnt = __builtin_popcount(pick);
      if (cnt % 2 != 0 || cnt < 2) continue;  // block size 1 + cnt must be odd >= 3
      SignedBlock b;
      b.members.push_back(e);
      unsigned used = 1u << e;
      for (int k = 0; k < m; ++k)
        if (pick & (1u << k)) {
          b.members.push_back(pool[k]);
          used |= 1u << pool[k];
        }
      int sz = static_cast<int>(b.members.size());
      for (unsigned s = 0; s < (1u << (sz - 1)); ++s) {
        b.signs = s << 1;  // sign of the smallest member fixed to +
        cur.push_back(b);
        gen_blocks(n, free & ~used, e + 1, cur, emit);
        cur.pop_back();
      }
    }
  }
}

}  // namespace

EvenPoset dowling_even_poset(int n) {
  if (n < 1) throw ParseError("dowling_even_poset requires n >= 1");
  if (n > 12) throw ParseError("dowling oracle limited to n <= 12");
  RootIndexer ix(n);

  std::vector<DElement> els;
  for (unsigned i_set = 0; i_set < (1u << n); ++i_set) {
    if (__builtin_popcount(i_set) % 2 != 0) continue;
    unsigned free = ((1u << n) - 1) & ~i_set;
    std::vector<SignedBlock> cur;
    gen_blocks(n, free, 0, cur, [&](const std::vector<SignedBlock>& blocks) {
      DElement e;
      e.i_set = i_set;
      e.blocks = blocks;
      e.rank = __builtin_popcount(i_set);
      for (const auto& b : blocks) e.rank += static_cast<int>(b.members.size()) - 1;
      e.roots = element_roots(ix, n, e);
      els.push_back(std::move(e));
    });
  }

  std::sort(els.begin(), els.end(), [](const DElement& a, const DElement& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.roots < b.roots;
  });

  // order is containment of the root-set labels; Moebius by direct recursion
  const std::size_t L = els.size();
  std::vector<std::int64_t> mu(L, 0);
  mu[0] = 1;
  for (std::size_t j = 1; j < L; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < j; ++i)
      if (els[i].rank < els[j].rank && els[i].roots.subset_of(els[j].roots)) {
        if (__builtin_add_overflow(s, mu[i], &s)) throw Error("overflow in Dowling Moebius");
      }
    mu[j] = -s;
  }

  std::vector<std::pair<std::int32_t, std::int32_t>> covers;
  for (std::size_t j = 0; j < L; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (els[i].rank == els[j].rank - 2 && els[i].roots.subset_of(els[j].roots))
        covers.emplace_back(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));

  std::vector<EvenPoset::Element> elements(L);
  for (std::size_t i = 0; i < L; ++i) {
    elements[i].roots = els[i].roots;
    elements[i].rank = static_cast<std::int16_t>(els[i].rank);
  }
  return EvenPoset::from_parts(CoxeterType::B(n), static_cast<int>(ix.rs.n_positive()),
                               std::move(elements), std::move(mu), std::move(covers));
}

}  // namespace dcp::flats
