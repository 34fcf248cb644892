#include "realdcp/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dcp::rootsys {

namespace {

// ---- integer-coordinate generation (crystallographic families + G2) ----

struct IntVecLess {
  int dim;
  bool operator()(const IntVec& a, const IntVec& b) const {
    for (int i = 0; i < dim; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

IntVec ivec(std::initializer_list<std::int64_t> xs) {
  IntVec v{};
  int i = 0;
  for (auto x : xs) v[i++] = x;
  return v;
}

IntVec int_reflect(const IntVec& v, const IntVec& a, int dim) {
  std::int64_t num = 2 * idot(v, a, dim);
  std::int64_t den = idot(a, a, dim);
  if (num % den != 0) throw Error("non-integral reflection coefficient");
  std::int64_t c = num / den;
  IntVec r = v;
  for (int i = 0; i < dim; ++i) r[i] -= c * a[i];
  return r;
}

// orbit of the simple roots under the simple reflections
std::vector<IntVec> closure_from_simples(const std::vector<IntVec>& simples, int dim) {
  std::set<IntVec, IntVecLess> all{IntVecLess{dim}};
  for (const auto& s : simples) all.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntVec> snapshot(all.begin(), all.end());
    for (const auto& v : snapshot)
      for (const auto& s : simples)
        if (all.insert(int_reflect(v, s, dim)).second) grew = true;
  }
  return {all.begin(), all.end()};
}

void canonicalize_sign(IntVec& v, int dim) {
  for (int i = 0; i < dim; ++i) {
    if (v[i] > 0) return;
    if (v[i] < 0) {
      for (int j = 0; j < dim; ++j) v[j] = -v[j];
      return;
    }
  }
}

std::vector<IntVec> positive_reps(std::vector<IntVec> roots, int dim) {
  std::set<IntVec, IntVecLess> reps{IntVecLess{dim}};
  for (auto v : roots) {
    canonicalize_sign(v, dim);
    reps.insert(v);
  }
  return {reps.begin(), reps.end()};
}

std::vector<IntVec> simples_for(const CoxeterType& t, int& dim) {
  const int n = t.rank;
  std::vector<IntVec> s;
  auto e = [&](int i) {
    IntVec v{};
    v[i] = 1;
    return v;
  };
  auto diff = [&](int i, int j) {
    IntVec v{};
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  switch (t.family) {
    case Family::A:
      dim = n + 1;
      for (int i = 0; i < n; ++i) s.push_back(diff(i, i + 1));
      return s;
    case Family::B:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(i, i + 1));
      s.push_back(e(n - 1));
      return s;
    case Family::D: {
      dim = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(i, i + 1));
      IntVec v{};
      v[n - 2] = 1;
      v[n - 1] = 1;
      s.push_back(v);
      return s;
    }
    case Family::E: {
      dim = 8;
      // Bourbaki simple roots of E8, scaled by 2 to clear half-integers;
      // E6 and E7 are the subdiagrams on the first 6 and 7 of them.
      std::vector<IntVec> e8 = {
          ivec({1, -1, -1, -1, -1, -1, -1, 1}),
          ivec({2, 2, 0, 0, 0, 0, 0, 0}),
          ivec({-2, 2, 0, 0, 0, 0, 0, 0}),
          ivec({0, -2, 2, 0, 0, 0, 0, 0}),
          ivec({0, 0, -2, 2, 0, 0, 0, 0}),
          ivec({0, 0, 0, -2, 2, 0, 0, 0}),
          ivec({0, 0, 0, 0, -2, 2, 0, 0}),
          ivec({0, 0, 0, 0, 0, -2, 2, 0}),
      };
      e8.resize(n);
      return e8;
    }
    case Family::F:
      dim = 4;
      return {ivec({0, 2, -2, 0}), ivec({0, 0, 2, -2}), ivec({0, 0, 0, 2}),
              ivec({1, -1, -1, -1})};
    case Family::I2:
      if (t.m == 3) {  // A2 arrangement in the sum-zero plane
        dim = 3;
        return {ivec({1, -1, 0}), ivec({0, 1, -1})};
      }
      if (t.m == 4) {  // B2 arrangement
        dim = 2;
        return {ivec({1, -1}), ivec({0, 1})};
      }
      if (t.m == 6) {  // G2 arrangement in the sum-zero plane
        dim = 3;
        return {ivec({1, -1, 0}), ivec({-2, 1, 1})};
      }
      throw Error("no integral model");
    default: throw Error("no integral model");
  }
}

// ---- Q(sqrt5) generation for H3 / H4 ----

std::vector<ScalarVec> h_type_roots(int rank) {
  const Scalar one(1), two(2);
  const Scalar phi = Scalar::phi();
  const Scalar phinv = phi - one;  // 1/phi
  std::vector<ScalarVec> out;
  if (rank == 3) {
    // scaled by 2: (2,0,0) & cyclic, and cyclic shifts of (±1, ±phi, ±1/phi)
    for (int i = 0; i < 3; ++i) {
      ScalarVec v(3, Scalar(0));
      v[i] = two;
      out.push_back(v);
      v[i] = -two;
      out.push_back(v);
    }
    Scalar base[3] = {one, phi, phinv};
    for (int shift = 0; shift < 3; ++shift)
      for (int mask = 0; mask < 8; ++mask) {
        ScalarVec v(3);
        for (int i = 0; i < 3; ++i) {
          Scalar c = base[i];
          if (mask & (1 << i)) c = -c;
          v[(i + shift) % 3] = c;
        }
        out.push_back(v);
      }
    return out;
  }
  // H4, scaled by 2: (±2,0,0,0) & perms, (±1,±1,±1,±1),
  // and even permutations of (0, ±1, ±1/phi, ±phi)
  for (int i = 0; i < 4; ++i) {
    ScalarVec v(4, Scalar(0));
    v[i] = two;
    out.push_back(v);
    v[i] = -two;
    out.push_back(v);
  }
  for (int mask = 0; mask < 16; ++mask) {
    ScalarVec v(4);
    for (int i = 0; i < 4; ++i) v[i] = (mask & (1 << i)) ? -one : one;
    out.push_back(v);
  }
  int perm[4] = {0, 1, 2, 3};
  Scalar base[4] = {Scalar(0), one, phinv, phi};
  do {
    // parity of perm
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inv;
    if (inv % 2) continue;
    for (int mask = 0; mask < 8; ++mask) {
      ScalarVec v(4);
      Scalar vals[4] = {base[0], base[1], base[2], base[3]};
      for (int i = 1; i < 4; ++i)
        if (mask & (1 << (i - 1))) vals[i] = -vals[i];
      for (int i = 0; i < 4; ++i) v[perm[i]] = vals[i];
      out.push_back(v);
    }
  } while (std::next_permutation(perm, perm + 4));
  return out;
}

void canonicalize_sign(ScalarVec& v) {
  for (auto& c : v) {
    int s = c.sign();
    if (s > 0) return;
    if (s < 0) {
      for (auto& x : v) x = -x;
      return;
    }
  }
}

struct ScalarVecLess {
  bool operator()(const ScalarVec& a, const ScalarVec& b) const { return lex_less(a, b); }
};

std::vector<ScalarVec> positive_reps(const std::vector<ScalarVec>& roots) {
  std::set<ScalarVec, ScalarVecLess> reps;
  for (auto v : roots) {
    canonicalize_sign(v);
    reps.insert(v);
  }
  return {reps.begin(), reps.end()};
}

ScalarVec reflect_vec(const ScalarVec& v, const ScalarVec& a) {
  Scalar c = (dot(v, a) + dot(v, a)) / dot(a, a);
  ScalarVec r = v;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * a[i];
  return r;
}

// a positive root is simple iff its reflection permutes the other positives
std::vector<int> find_simple_roots(const std::vector<ScalarVec>& pos) {
  std::vector<int> simples;
  for (std::size_t a = 0; a < pos.size(); ++a) {
    bool simple = true;
    for (std::size_t b = 0; b < pos.size() && simple; ++b) {
      if (a == b) continue;
      ScalarVec r = reflect_vec(pos[b], pos[a]);
      for (const auto& c : r) {
        int s = c.sign();
        if (s > 0) break;
        if (s < 0) {
          simple = false;
          break;
        }
      }
    }
    if (simple) simples.push_back(static_cast<int>(a));
  }
  return simples;
}

RootSystem finalize(const CoxeterType& type, int dim, std::vector<ScalarVec> pos) {
  RootSystem rs;
  rs.type = type;
  rs.dimension = dim;
  std::sort(pos.begin(), pos.end(), ScalarVecLess{});
  rs.positive_roots = std::move(pos);
  long expect = type.positive_root_count();
  if (rs.n_positive() != expect)
    throw Error("root generation for " + type.name() + " produced " +
                std::to_string(rs.n_positive()) + " hyperplanes, expected " +
                std::to_string(expect));
  rs.simple_roots = find_simple_roots(rs.positive_roots);
  if (static_cast<int>(rs.simple_roots.size()) != type.rank)
    throw Error("simple system of " + type.name() + " has size " +
                std::to_string(rs.simple_roots.size()));
  // integer model when every coordinate is a plain integer
  rs.integral = true;
  for (const auto& v : rs.positive_roots)
    for (const auto& c : v)
      if (!c.is_rational() || !is_integer(c.rat)) rs.integral = false;
  if (rs.integral) {
    if (dim > kMaxDim) throw Error("ambient dimension exceeds kMaxDim");
    for (const auto& v : rs.positive_roots) {
      IntVec iv{};
      for (int i = 0; i < dim; ++i) iv[i] = to_int64(v[i].rat);
      rs.int_roots.push_back(iv);
    }
  }
  return rs;
}

std::vector<ScalarVec> to_scalar(const std::vector<IntVec>& vs, int dim) {
  std::vector<ScalarVec> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    ScalarVec w(dim);
    for (int i = 0; i < dim; ++i) w[i] = Scalar(Rational(v[i]));
    out.push_back(std::move(w));
  }
  return out;
}

RootSystem build_i2_5() {
  // realized as a rank-2 parabolic of H3: the span of two simple roots
  // joined by an edge labelled 5 in the Coxeter graph
  RootSystem h3 = build_root_system(CoxeterType::H(3));
  const Scalar phi2 = Scalar::phi() * Scalar::phi();  // 4 cos^2(pi/5)
  for (std::size_t ai = 0; ai < h3.simple_roots.size(); ++ai)
    for (std::size_t bi = ai + 1; bi < h3.simple_roots.size(); ++bi) {
      const ScalarVec& a = h3.positive_roots[h3.simple_roots[ai]];
      const ScalarVec& b = h3.positive_roots[h3.simple_roots[bi]];
      Scalar c = dot(a, b);
      Scalar c2 = (c * c * Scalar(4)) / (dot(a, a) * dot(b, b));
      if (c2 == phi2) {
        ScalarEchelon span(3);
        span.add(a);
        span.add(b);
        std::vector<ScalarVec> pos;
        for (const auto& r : h3.positive_roots)
          if (span.contains(r)) pos.push_back(r);
        return finalize(CoxeterType::I(5), 3, std::move(pos));
      }
    }
  throw Error("H3 has no I2(5) parabolic?");
}

}  // namespace

RootSystem build_root_system(const CoxeterType& type) {
  type.validate();
  switch (type.family) {
    case Family::H:
      return finalize(type, type.rank, positive_reps(h_type_roots(type.rank)));
    case Family::I2:
      if (type.m == 5) return build_i2_5();
      if (type.m != 3 && type.m != 4 && type.m != 6)
        throw ParseError("I2(" + std::to_string(type.m) +
                         ") has no exact coordinate model here (only m in {3,4,5,6}); "
                         "the poset is available via the synthetic I2 construction");
      [[fallthrough]];
    default: {
      int dim = 0;
      auto simples = simples_for(type, dim);
      auto all = closure_from_simples(simples, dim);
      return finalize(type, dim, to_scalar(positive_reps(std::move(all), dim), dim));
    }
  }
}

ScalarVec reflect(const RootSystem& rs, int root_index, const ScalarVec& v) {
  if (root_index < 0 || root_index >= rs.n_positive())
    throw Error("root index " + std::to_string(root_index) + " out of range (" +
                std::to_string(rs.n_positive()) + " positive roots)");
  if (static_cast<int>(v.size()) != rs.dimension)
    throw Error("vector dimension mismatch in reflect()");
  return reflect_vec(v, rs.positive_roots[root_index]);
}

}  // namespace dcp::rootsys
