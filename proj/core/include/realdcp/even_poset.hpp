#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "realdcp/flat.hpp"

namespace dcp::flats {

/// Integer polynomial in t; coeffs[k] is the coefficient of t^k.
struct CharPoly {
  std::vector<std::int64_t> coeffs;

  std::string str() const;
  std::int64_t at_one() const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const CharPoly&) const = default;

  friend CharPoly operator+(const CharPoly& a, const CharPoly& b);
  /// multiply by c * t^k
  CharPoly shifted_scaled(std::int64_t c, int k) const;
};

struct EnumOptions {
  std::size_t element_cap = 100000000;  // graceful failure above this
  int workers = 1;                      // result is identical for any value
};

/// One irreducible even flat, the building block of poset elements.
struct IrreducibleFlat {
  RootBitset roots;
  int rank = 0;
  CoxeterType type;
  RootBitset ortho_mask;  // roots orthogonal to every member
};

/// The poset of flats all of whose irreducible components have even rank,
/// fully enumerated, with Moebius numbers and (lazily) the cover relations.
class EvenPoset {
 public:
  struct Element {
    RootBitset roots;
    std::int16_t rank = 0;               // flat rank (even)
    std::vector<std::int32_t> comps;     // indices into irreducibles(), ascending
  };

  EvenPoset() = default;

  /// Assembles a poset from precomputed parts (synthetic posets, the Dowling
  /// oracle, cache reload). Covers are mandatory here since no geometry is
  /// attached to recompute them.
  static EvenPoset from_parts(CoxeterType type, int n_roots,
                              std::vector<Element> elements,
                              std::vector<std::int64_t> mobius,
                              std::vector<std::pair<std::int32_t, std::int32_t>> covers);

  const CoxeterType& type() const { return type_; }
  int w_rank() const { return type_.rank; }
  int n_roots() const { return n_roots_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }
  int poset_rank(std::size_t i) const { return elements_[i].rank / 2; }
  int top_rank() const;
  const std::vector<std::int64_t>& mobius() const { return mobius_; }
  const std::vector<IrreducibleFlat>& irreducibles() const { return iefs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }

  std::vector<std::size_t> level_sizes() const;  // indexed by poset rank
  std::size_t atom_count() const;
  std::size_t index_of(const RootBitset& roots) const;  // throws if absent

  /// coefficient of t^k = sum of mobius over elements of poset rank k
  CharPoly char_poly() const;
  /// b_i = (-1)^i * coefficient; throws ConsistencyError on a sign violation
  std::vector<std::int64_t> betti_numbers() const;
  std::int64_t euler_characteristic() const;

  /// Cover relations (lower, upper), sorted; materialized on first use.
  const std::vector<std::pair<std::int32_t, std::int32_t>>& covers() const;
  bool covers_materialized() const { return covers_done_; }

 private:
  friend EvenPoset enumerate_even_poset(const RootSystem&, const EnumOptions&);
  void materialize_covers() const;  // covers.cpp

  CoxeterType type_;
  int n_roots_ = 0;
  std::shared_ptr<const RootSystem> rs_;  // null for synthetic/loaded posets
  std::vector<Element> elements_;         // sorted by (rank, roots)
  std::vector<std::int64_t> mobius_;
  std::vector<IrreducibleFlat> iefs_;
  mutable bool covers_done_ = false;
  mutable std::vector<std::pair<std::int32_t, std::int32_t>> covers_;
};

EvenPoset enumerate_even_poset(const RootSystem& rs, const EnumOptions& opts = {});

/// The two-element poset {0, top} of any dihedral type, valid for every
/// m >= 3 (no coordinates needed: in rank 2 the only even flats are the
/// empty one and the full one).
EvenPoset synthetic_i2(int m);

/// Moebius number of the maximum of the even poset of an irreducible
/// even-rank type (memoized; enumerates the poset on first use).
std::int64_t mu_top(const CoxeterType& type);

}  // namespace dcp::flats
