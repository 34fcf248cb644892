#pragma once

#include <cstdint>
#include <string>

#include "realdcp/errors.hpp"

namespace dcp::rootsys {

enum class Family : std::uint8_t { A, B, D, E, F, H, I2 };

/// An irreducible finite Coxeter type: family tag plus rank (plus the
/// dihedral order m when the family is I2).
struct CoxeterType {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // only meaningful for I2

  CoxeterType() = default;
  CoxeterType(Family f, int r, int m_ = 0) : family(f), rank(r), m(m_) { validate(); }

  static CoxeterType A(int n) { return {Family::A, n}; }
  static CoxeterType B(int n) { return {Family::B, n}; }
  static CoxeterType D(int n) { return {Family::D, n}; }
  static CoxeterType E(int n) { return {Family::E, n}; }
  static CoxeterType F4() { return {Family::F, 4}; }
  static CoxeterType H(int n) { return {Family::H, n}; }
  static CoxeterType I(int m) { return {Family::I2, 2, m}; }

  void validate() const;

  /// Number of reflecting hyperplanes (= positive roots).
  long positive_root_count() const;

  bool operator==(const CoxeterType& o) const {
    return family == o.family && rank == o.rank && (family != Family::I2 || m == o.m);
  }
  bool operator!=(const CoxeterType& o) const { return !(*this == o); }
  bool operator<(const CoxeterType& o) const {
    if (family != o.family) return family < o.family;
    if (rank != o.rank) return rank < o.rank;
    return (family == Family::I2 ? m : 0) < (o.family == Family::I2 ? o.m : 0);
  }

  std::string name() const;
};

/// Parses strings like "A5", "B3", "E7", "H4", "I2(7)".
CoxeterType parse_coxeter_type(const std::string& s);

}  // namespace dcp::rootsys
