#include "realdcp/flat.hpp"

#include <algorithm>

namespace dcp::flats {

using rootsys::IntEchelon;
using rootsys::IntVec;
using rootsys::Scalar;
using rootsys::idot;
using rootsys::kMaxDim;

namespace {

// integer row for a Q(sqrt5) vector: coordinate a + b*phi -> (a, b),
// scaled by the common denominator (per-row scaling does not change spans)
IntVec embed_phi(const rootsys::ScalarVec& v) {
  std::vector<Rational> entries;
  entries.reserve(v.size() * 2);
  Integer lcm = 1;
  for (const auto& c : v) {
    // rat + surd*sqrt5 = (rat - surd) + (2 surd) * phi
    entries.push_back(c.rat - c.surd);
    entries.push_back(2 * c.surd);
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), entries[entries.size() - 2].get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), entries[entries.size() - 1].get_den_mpz_t());
  }
  if (entries.size() > kMaxDim) throw Error("embedded dimension exceeds kMaxDim");
  IntVec out{};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Rational scaled = entries[i] * lcm;
    out[i] = to_int64(scaled);
  }
  return out;
}

}  // namespace

RootGeometry::RootGeometry(std::shared_ptr<const RootSystem> rs)
    : rs_(std::move(rs)), n_(static_cast<int>(rs_->positive_roots.size())) {
  if (n_ > 128) throw Error("more than 128 positive roots");
  all_ = RootBitset::all(n_);
  const int dim = rs_->dimension;
  if (rs_->integral) {
    rank_scale_ = 1;
    int_dim_ = dim;
    gens_ = rs_->int_roots;
  } else {
    rank_scale_ = 2;
    int_dim_ = 2 * dim;
    const Scalar phi = Scalar::phi();
    for (const auto& v : rs_->positive_roots) {
      gens_.push_back(embed_phi(v));
      rootsys::ScalarVec pv(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) pv[i] = phi * v[i];
      gens_.push_back(embed_phi(pv));
    }
  }
  nonorth_.resize(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!dot(rs_->positive_roots[i], rs_->positive_roots[j]).is_zero()) nonorth_[i].set(j);
  // squared lengths, bucketed into small class ids
  norm_class_.resize(n_);
  std::vector<Scalar> seen;
  for (int i = 0; i < n_; ++i) {
    Scalar nrm = dot(rs_->positive_roots[i], rs_->positive_roots[i]);
    int id = -1;
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (seen[k] == nrm) id = static_cast<int>(k);
    if (id < 0) {
      id = static_cast<int>(seen.size());
      seen.push_back(nrm);
    }
    norm_class_[i] = id;
  }
}

bool RootGeometry::add_root(IntEchelon& e, int root) const {
  if (!e.add(generator(root, 0))) return false;
  if (rank_scale_ == 2 && !e.add(generator(root, 1)))
    throw Error("phi-multiple collapsed in embedded span");
  return true;
}

RootBitset RootGeometry::members(const IntEchelon& e) const {
  RootBitset m;
  for (int i = 0; i < n_; ++i)
    if (e.contains(generator(i, 0))) m.set(i);
  return m;
}

int RootGeometry::rank_of(const RootBitset& members) const {
  IntEchelon e = empty_echelon();
  members.for_each([&](int i) { add_root(e, i); });
  return flat_rank(e);
}

CoxeterType RootGeometry::classify(int rank, int count, int distinct_norms) {
  using rootsys::CoxeterType;
  if (rank == 1) return CoxeterType::A(1);
  if (rank == 2) {
    if (count == 3) return CoxeterType::A(2);
    if (count == 4) return CoxeterType::B(2);
    return CoxeterType::I(count);
  }
  if (count == rank * (rank + 1) / 2) return CoxeterType::A(rank);
  if (rank == 6 && count == 36)
    return distinct_norms == 1 ? CoxeterType::E(6) : CoxeterType::B(6);
  if (count == rank * rank) return CoxeterType::B(rank);
  if (rank >= 4 && count == rank * (rank - 1)) return CoxeterType::D(rank);
  if (rank == 7 && count == 63) return CoxeterType::E(7);
  if (rank == 8 && count == 120) return CoxeterType::E(8);
  if (rank == 4 && count == 24) return CoxeterType::F4();
  if (rank == 3 && count == 15) return CoxeterType::H(3);
  if (rank == 4 && count == 60) return CoxeterType::H(4);
  throw Error("unrecognized irreducible subsystem: rank " + std::to_string(rank) +
              ", " + std::to_string(count) + " hyperplanes");
}

Flat RootGeometry::flat_from_members(const RootBitset& members, int rank) const {
  Flat f;
  f.roots = members;
  // connected components of the non-orthogonality graph on the members
  RootBitset left = members;
  while (!left.empty()) {
    int start = left.min_bit();
    RootBitset comp;
    comp.set(start);
    RootBitset frontier = comp;
    while (!frontier.empty()) {
      RootBitset next;
      frontier.for_each([&](int i) { next = next | (nonorth_[i] & left); });
      next = next.minus(comp);
      comp = comp | next;
      frontier = next;
    }
    left = left.minus(comp);
    Component c;
    c.roots = comp;
    c.rank = rank_of(comp);
    int norms_seen = 0;
    bool have[8] = {false};
    comp.for_each([&](int i) {
      if (!have[norm_class_[i]]) {
        have[norm_class_[i]] = true;
        ++norms_seen;
      }
    });
    c.type = classify(c.rank, comp.count(), norms_seen);
    f.components.push_back(std::move(c));
  }
  f.rank = 0;
  for (const auto& c : f.components) f.rank += c.rank;
  if (rank >= 0 && rank != f.rank)
    throw Error("component ranks do not sum to the span rank");
  return f;
}

Flat RootGeometry::closure(const std::vector<int>& seed) const {
  for (int i : seed)
    if (i < 0 || i >= n_)
      throw Error("seed root index " + std::to_string(i) + " out of range");
  IntEchelon e = empty_echelon();
  for (int i : seed) add_root(e, i);
  return flat_from_members(members(e), flat_rank(e));
}

}  // namespace dcp::flats
