#pragma once

#include <cstdint>
#include <functional>

namespace dcp {

/// Fixed 128-bit set; enough for the largest positive root count (E8: 120).
struct RootBitset {
  std::uint64_t w0 = 0, w1 = 0;

  static RootBitset all(int n) {
    RootBitset b;
    if (n >= 64) {
      b.w0 = ~0ULL;
      b.w1 = n == 128 ? ~0ULL : ((1ULL << (n - 64)) - 1);
    } else {
      b.w0 = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    }
    return b;
  }

  void set(int i) { (i < 64 ? w0 : w1) |= 1ULL << (i & 63); }
  void reset(int i) { (i < 64 ? w0 : w1) &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return ((i < 64 ? w0 : w1) >> (i & 63)) & 1; }
  bool empty() const { return w0 == 0 && w1 == 0; }
  int count() const { return __builtin_popcountll(w0) + __builtin_popcountll(w1); }

  bool subset_of(const RootBitset& o) const {
    return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0;
  }
  bool intersects(const RootBitset& o) const {
    return (w0 & o.w0) != 0 || (w1 & o.w1) != 0;
  }

  friend RootBitset operator|(RootBitset a, const RootBitset& b) {
    a.w0 |= b.w0;
    a.w1 |= b.w1;
    return a;
  }
  friend RootBitset operator&(RootBitset a, const RootBitset& b) {
    a.w0 &= b.w0;
    a.w1 &= b.w1;
    return a;
  }
  friend RootBitset operator~(RootBitset a) {
    a.w0 = ~a.w0;
    a.w1 = ~a.w1;
    return a;
  }
  RootBitset minus(const RootBitset& o) const {
    RootBitset r = *this;
    r.w0 &= ~o.w0;
    r.w1 &= ~o.w1;
    return r;
  }

  bool operator==(const RootBitset& o) const { return w0 == o.w0 && w1 == o.w1; }
  bool operator!=(const RootBitset& o) const { return !(*this == o); }
  /// Lexicographic by ascending member list (used for canonical element order).
  bool operator<(const RootBitset& o) const {
    // compare lowest set bits first: reverse-bit order on the words
    std::uint64_t a0 = bitrev(w0), b0 = bitrev(o.w0);
    if (a0 != b0) return a0 > b0;  // smaller first element sorts earlier
    return bitrev(w1) > bitrev(o.w1);
  }

  int min_bit() const {
    if (w0) return __builtin_ctzll(w0);
    if (w1) return 64 + __builtin_ctzll(w1);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    std::uint64_t x = w0;
    while (x) {
      f(__builtin_ctzll(x));
      x &= x - 1;
    }
    x = w1;
    while (x) {
      f(64 + __builtin_ctzll(x));
      x &= x - 1;
    }
  }

 private:
  static std::uint64_t bitrev(std::uint64_t v) {
    v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
    v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
    return (v >> 32) | (v << 32);
  }
};

struct RootBitsetHash {
  std::size_t operator()(const RootBitset& b) const {
    std::uint64_t h = b.w0 * 0x9E3779B97F4A7C15ULL;
    h ^= b.w1 + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace dcp
