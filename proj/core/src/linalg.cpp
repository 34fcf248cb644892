#include "realdcp/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "realdcp/errors.hpp"

namespace dcp::rootsys {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("integer overflow in exact elimination");
  return static_cast<std::int64_t>(v);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// w <- (p*w - c*row) / content, in 128-bit intermediates
void eliminate(IntVec& w, const IntVec& row, std::int64_t p, std::int64_t c, int dim) {
  std::array<i128, kMaxDim> tmp{};
  for (int i = 0; i < dim; ++i) tmp[i] = i128(p) * w[i] - i128(c) * row[i];
  i128 g = 0;
  for (int i = 0; i < dim; ++i) {
    i128 v = tmp[i] < 0 ? -tmp[i] : tmp[i];
    g = g == 0 ? v : [](i128 a, i128 b) {
      while (b) {
        i128 t = a % b;
        a = b;
        b = t;
      }
      return a;
    }(g, v);
    if (g == 1) break;
  }
  if (g == 0) g = 1;
  for (int i = 0; i < dim; ++i) w[i] = checked_narrow(tmp[i] / g);
}

}  // namespace

void IntEchelon::make_primitive(IntVec& w, int dim) {
  std::int64_t g = 0;
  int lead = -1;
  for (int i = 0; i < dim; ++i) {
    if (w[i] != 0 && lead < 0) lead = i;
    g = gcd64(g, w[i]);
  }
  if (g == 0) return;
  if (lead >= 0 && w[lead] < 0) g = -g;
  for (int i = 0; i < dim; ++i) w[i] /= g;
}

bool IntEchelon::reduce(IntVec& w) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int p = pivots_[r];
    if (w[p] != 0) eliminate(w, rows_[r], rows_[r][p], w[p], dim_);
  }
  for (int i = 0; i < dim_; ++i)
    if (w[i] != 0) return false;
  return true;
}

bool IntEchelon::contains(const IntVec& v) const {
  std::array<i128, kMaxDim> w{};
  for (int i = 0; i < dim_; ++i) w[i] = v[i];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int p = pivots_[r];
    if (w[p] != 0) {
      i128 c = w[p], pv = rows_[r][p];
      for (int i = 0; i < dim_; ++i) w[i] = pv * w[i] - c * rows_[r][i];
    }
  }
  for (int i = 0; i < dim_; ++i)
    if (w[i] != 0) return false;
  return true;
}

bool IntEchelon::add(const IntVec& v) {
  IntVec w = v;
  if (reduce(w)) return false;
  make_primitive(w, dim_);
  int pivot = 0;
  while (w[pivot] == 0) ++pivot;
  // back-eliminate the new pivot column from existing rows (keeps full RREF)
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][pivot] != 0) {
      eliminate(rows_[r], w, w[pivot], rows_[r][pivot], dim_);
      make_primitive(rows_[r], dim_);
    }
  }
  std::size_t pos = 0;
  while (pos < rows_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, w);
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

std::vector<std::int64_t> IntEchelon::key() const {
  std::vector<std::int64_t> k;
  k.reserve(1 + rows_.size() * dim_);
  k.push_back(rank());
  for (const auto& r : rows_)
    for (int i = 0; i < dim_; ++i) k.push_back(r[i]);
  return k;
}

bool ScalarEchelon::reduce(ScalarVec& w) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int p = pivots_[r];
    if (!w[p].is_zero()) {
      Scalar c = w[p];  // pivot of stored row is 1
      for (int i = 0; i < dim_; ++i) w[i] -= c * rows_[r][i];
    }
  }
  for (int i = 0; i < dim_; ++i)
    if (!w[i].is_zero()) return false;
  return true;
}

bool ScalarEchelon::add(const ScalarVec& v) {
  ScalarVec w = v;
  if (reduce(w)) return false;
  int pivot = 0;
  while (w[pivot].is_zero()) ++pivot;
  Scalar inv = w[pivot].inverse();
  for (int i = 0; i < dim_; ++i) w[i] = w[i] * inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (!rows_[r][pivot].is_zero()) {
      Scalar c = rows_[r][pivot];
      for (int i = 0; i < dim_; ++i) rows_[r][i] -= c * w[i];
    }
  }
  std::size_t pos = 0;
  while (pos < rows_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, w);
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

std::string ScalarEchelon::key() const {
  std::ostringstream os;
  os << rank() << ';';
  for (const auto& r : rows_) {
    for (int i = 0; i < dim_; ++i) os << r[i].str() << ',';
    os << '|';
  }
  return os.str();
}

}  // namespace dcp::rootsys
