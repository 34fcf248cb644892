#pragma once

#include <memory>
#include <vector>

#include "realdcp/bitset128.hpp"
#include "realdcp/root_system.hpp"

namespace dcp::flats {

using rootsys::CoxeterType;
using rootsys::RootSystem;

/// Irreducible block of a flat: the roots of one connected component of the
/// non-orthogonality graph, with its span dimension and recognized type.
struct Component {
  RootBitset roots;
  int rank = 0;
  CoxeterType type;
};

/// A closed set of positive roots (all roots lying in the span of its members).
struct Flat {
  RootBitset roots;
  int rank = 0;
  std::vector<Component> components;

  bool all_components_even() const {
    for (const auto& c : components)
      if (c.rank % 2) return false;
    return true;
  }
};

/// Precomputed geometry of a root system: orthogonality graph, norm classes,
/// and exact span arithmetic. All span computations run fraction-free over
/// the integers: crystallographic realizations directly, and Q(sqrt5)
/// coordinates through the phi-stable embedding a + b*phi -> (a, b), under
/// which a Q(sqrt5)-span becomes a rational span of twice the dimension
/// generated by emb(r) and emb(phi r) for each root r.
class RootGeometry {
 public:
  explicit RootGeometry(std::shared_ptr<const RootSystem> rs);

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
  int n() const { return n_; }
  const RootBitset& all_mask() const { return all_; }
  const RootBitset& non_orthogonal(int i) const { return nonorth_[i]; }

  /// dimension of the integer model, and how many integer dimensions one
  /// rank unit occupies (2 for the embedded Q(sqrt5) types)
  int int_dim() const { return int_dim_; }
  int rank_scale() const { return rank_scale_; }
  const rootsys::IntVec& generator(int root, int which) const {
    return gens_[static_cast<std::size_t>(root) * rank_scale_ + which];
  }

  rootsys::IntEchelon empty_echelon() const { return rootsys::IntEchelon(int_dim_); }
  /// Adds all generator rows of a root; false when the root is in the span.
  bool add_root(rootsys::IntEchelon& e, int root) const;
  bool span_contains(const rootsys::IntEchelon& e, int root) const {
    return e.contains(generator(root, 0));
  }
  int flat_rank(const rootsys::IntEchelon& e) const { return e.rank() / rank_scale_; }

  /// Minimal flat containing the seed (all roots in the seed's span).
  Flat closure(const std::vector<int>& seed) const;

  /// Members of the span described by an echelon basis.
  RootBitset members(const rootsys::IntEchelon& e) const;

  /// Flat (components, ranks, types) from a member set whose span has the
  /// given rank; rank < 0 recomputes it.
  Flat flat_from_members(const RootBitset& members, int rank = -1) const;

  int rank_of(const RootBitset& members) const;

  static CoxeterType classify(int rank, int count, int distinct_norms);

 private:
  std::shared_ptr<const RootSystem> rs_;
  int n_;
  int int_dim_ = 0;
  int rank_scale_ = 1;
  std::vector<rootsys::IntVec> gens_;  // rank_scale_ rows per root
  RootBitset all_;
  std::vector<RootBitset> nonorth_;
  std::vector<int> norm_class_;
};

}  // namespace dcp::flats
