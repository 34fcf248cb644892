#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "realdcp/scalar.hpp"

namespace dcp::rootsys {

constexpr int kMaxDim = 12;

using IntVec = std::array<std::int64_t, kMaxDim>;

inline std::int64_t idot(const IntVec& a, const IntVec& b, int dim) {
  std::int64_t s = 0;
  for (int i = 0; i < dim; ++i) s += a[i] * b[i];
  return s;
}

/// Fraction-free reduced row echelon basis of an integer row space.
/// Rows are kept primitive (content 1) with positive pivots and fully
/// reduced against each other, which makes the row list a canonical key
/// for the rational row space.
class IntEchelon {
 public:
  explicit IntEchelon(int dim) : dim_(dim) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

  /// Reduces v against the basis; returns false (and leaves the basis
  /// unchanged) when v already lies in the row space.
  bool add(const IntVec& v);

  /// Membership of v in the row space (no normalization; 128-bit intermediates).
  bool contains(const IntVec& v) const;

  /// Canonical serialization of the row space (rank, then rows).
  std::vector<std::int64_t> key() const;

  const std::vector<IntVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  // returns true when w reduces to zero
  bool reduce(IntVec& w) const;
  static void make_primitive(IntVec& w, int dim);

  int dim_;
  std::vector<IntVec> rows_;   // sorted by pivot column
  std::vector<int> pivots_;
};

/// Row echelon basis over Q(sqrt5), rows normalized to pivot 1 and fully
/// reduced (unique RREF of the row space).
class ScalarEchelon {
 public:
  explicit ScalarEchelon(int dim) : dim_(dim) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  bool add(const ScalarVec& v);
  bool contains(const ScalarVec& v) const {
    ScalarVec w = v;
    return reduce(w);
  }
  std::string key() const;
  const std::vector<ScalarVec>& rows() const { return rows_; }

 private:
  bool reduce(ScalarVec& w) const;

  int dim_;
  std::vector<ScalarVec> rows_;
  std::vector<int> pivots_;
};

}  // namespace dcp::rootsys
