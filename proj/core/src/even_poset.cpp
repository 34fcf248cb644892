#include "realdcp/even_poset.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace dcp::flats {

using rootsys::IntEchelon;
using rootsys::ScalarEchelon;
using rootsys::build_root_system;

// ---------------------------------------------------------------- CharPoly

std::string CharPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::int64_t c = coeffs[k];
    if (c == 0 && !(k == 0 && coeffs.size() == 1)) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << " ";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::int64_t CharPoly::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs) {
    if (__builtin_add_overflow(s, c, &s)) throw Error("overflow in char poly evaluation");
  }
  return s;
}

CharPoly operator+(const CharPoly& a, const CharPoly& b) {
  CharPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

CharPoly CharPoly::shifted_scaled(std::int64_t c, int k) const {
  CharPoly r;
  r.coeffs.assign(coeffs.size() + k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i + k] = coeffs[i] * c;
  return r;
}

// ---------------------------------------------------------------- EvenPoset

int EvenPoset::top_rank() const {
  int r = 0;
  for (const auto& e : elements_) r = std::max(r, static_cast<int>(e.rank));
  return r / 2;
}

std::vector<std::size_t> EvenPoset::level_sizes() const {
  std::vector<std::size_t> ls(static_cast<std::size_t>(top_rank()) + 1, 0);
  for (const auto& e : elements_) ++ls[e.rank / 2];
  return ls;
}

std::size_t EvenPoset::atom_count() const {
  std::size_t c = 0;
  for (const auto& e : elements_)
    if (e.rank == 2) ++c;
  return c;
}

std::size_t EvenPoset::index_of(const RootBitset& roots) const {
  // elements_ sorted by (rank, roots); rank unknown -> binary search by roots
  // within each rank band would need the rank; do a hash-free linear fallback
  // only for small posets. Build a transient view: since lookups cluster, use
  // std::lower_bound over the full order (rank asc, roots lex) by probing all
  // rank bands.
  for (std::size_t lo = 0; lo < elements_.size();) {
    std::size_t hi = lo;
    int r = elements_[lo].rank;
    while (hi < elements_.size() && elements_[hi].rank == r) ++hi;
    auto it = std::lower_bound(elements_.begin() + lo, elements_.begin() + hi, roots,
                               [](const Element& e, const RootBitset& b) { return e.roots < b; });
    if (it != elements_.begin() + hi && it->roots == roots)
      return static_cast<std::size_t>(it - elements_.begin());
    lo = hi;
  }
  throw Error("flat not found in poset");
}

CharPoly EvenPoset::char_poly() const {
  CharPoly p;
  p.coeffs.assign(static_cast<std::size_t>(top_rank()) + 1, 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto& c = p.coeffs[elements_[i].rank / 2];
    if (__builtin_add_overflow(c, mobius_[i], &c))
      throw Error("overflow in char poly coefficient");
  }
  return p;
}

std::vector<std::int64_t> EvenPoset::betti_numbers() const {
  CharPoly p = char_poly();
  std::vector<std::int64_t> b(p.coeffs.size());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    std::int64_t v = (i % 2 == 0) ? p.coeffs[i] : -p.coeffs[i];
    if (v < 0)
      throw ConsistencyError("cm-sign",
                             "coefficient of t^" + std::to_string(i) + " in " + p.str() +
                                 " violates the sign alternation of " + type_.name());
    b[i] = v;
  }
  return b;
}

std::int64_t EvenPoset::euler_characteristic() const { return char_poly().at_one(); }

const std::vector<std::pair<std::int32_t, std::int32_t>>& EvenPoset::covers() const {
  if (!covers_done_) materialize_covers();
  return covers_;
}

EvenPoset EvenPoset::from_parts(CoxeterType type, int n_roots,
                                std::vector<Element> elements,
                                std::vector<std::int64_t> mobius,
                                std::vector<std::pair<std::int32_t, std::int32_t>> covers) {
  EvenPoset p;
  p.type_ = type;
  p.n_roots_ = n_roots;
  p.elements_ = std::move(elements);
  p.mobius_ = std::move(mobius);
  std::sort(covers.begin(), covers.end());
  p.covers_ = std::move(covers);
  p.covers_done_ = true;
  return p;
}

EvenPoset synthetic_i2(int m) {
  if (m < 3) throw ParseError("I2(m) requires m >= 3");
  std::vector<EvenPoset::Element> els(2);
  els[0].roots = RootBitset{};
  els[0].rank = 0;
  els[1].roots = RootBitset::all(m);
  els[1].rank = 2;
  return EvenPoset::from_parts(CoxeterType::I(m), m, std::move(els), {1, -1}, {{0, 1}});
}

// ------------------------------------------------------------- enumeration

namespace {

struct VecKeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

using SpanKeySet = std::unordered_set<std::vector<std::int64_t>, VecKeyHash>;
using rootsys::IntEchelon;

RootBitset ortho_mask_of(const RootGeometry& g, const RootBitset& members) {
  RootBitset nono;
  members.for_each([&](int i) { nono = nono | g.non_orthogonal(i); });
  return g.all_mask().minus(nono);
}

// splits [0, total) into at most `workers` contiguous chunks
std::vector<std::pair<std::size_t, std::size_t>> chunks_of(std::size_t total, int workers) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (total == 0) return out;
  std::size_t w = std::max(1, workers);
  w = std::min<std::size_t>(w, total);
  std::size_t base = total / w, extra = total % w, begin = 0;
  for (std::size_t k = 0; k < w; ++k) {
    std::size_t len = base + (k < extra ? 1 : 0);
    out.emplace_back(begin, begin + len);
    begin += len;
  }
  return out;
}

struct Enumerator {
  const RootGeometry& g;
  EnumOptions opts;

  struct LocalIef {
    RootBitset roots;
    int rank;
    CoxeterType type;
    RootBitset ortho;
    IntEchelon basis;
  };

  std::vector<LocalIef> iefs;
  std::vector<std::vector<std::int32_t>> adj;  // partners with larger id

  struct Ctx {
    std::vector<EvenPoset::Element> elements;
    std::map<int, std::size_t> rank_counts;
  };
  std::vector<EvenPoset::Element> elements;
  std::atomic<std::size_t> produced{0};
  std::atomic<bool> capped{false};

  Enumerator(const RootGeometry& g_, EnumOptions o) : g(g_), opts(o) {}

  // Breadth-first by rank over the irreducible even flats: covers come from
  // closures of the flat together with two extra hyperplanes, deduplicated
  // by the canonical echelon form of the candidate span.
  void find_irreducibles() {
    const int n = g.n();
    const int wrank = g.rs().rank();
    {
      SpanKeySet seen;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          IntEchelon e = g.empty_echelon();
          g.add_root(e, a);
          if (!g.add_root(e, b)) throw Error("parallel positive roots");
          if (!seen.insert(e.key()).second) continue;
          RootBitset mem = g.members(e);
          Flat f = g.flat_from_members(mem, 2);
          if (f.components.size() == 1)
            iefs.push_back({mem, 2, f.components[0].type, ortho_mask_of(g, mem), std::move(e)});
        }
    }
    std::size_t level_begin = 0;
    for (int rank = 4; rank <= wrank; rank += 2) {
      std::size_t level_end = iefs.size();
      auto parts = chunks_of(level_end - level_begin, opts.workers);
      std::vector<std::vector<LocalIef>> found(parts.size());
      auto worker = [&](std::size_t chunk) {
        SpanKeySet seen;
        std::unordered_set<RootBitset, RootBitsetHash> flat_seen;
        auto& out = found[chunk];
        for (std::size_t xi = level_begin + parts[chunk].first;
             xi < level_begin + parts[chunk].second; ++xi) {
          const LocalIef& X = iefs[xi];
          for (int a = 0; a < n; ++a) {
            if (X.roots.test(a)) continue;
            IntEchelon ea = X.basis;
            if (!g.add_root(ea, a)) throw Error("closed flat misses a span member");
            for (int b = a + 1; b < n; ++b) {
              if (X.roots.test(b)) continue;
              IntEchelon eab = ea;
              if (!g.add_root(eab, b)) continue;
              if (!seen.insert(eab.key()).second) continue;
              RootBitset mem = g.members(eab);
              if (!flat_seen.insert(mem).second) continue;
              Flat f = g.flat_from_members(mem, rank);
              if (f.components.size() == 1)
                out.push_back(
                    {mem, rank, f.components[0].type, ortho_mask_of(g, mem), std::move(eab)});
            }
          }
        }
      };
      run_chunks(parts.size(), worker);
      std::vector<LocalIef> merged;
      for (auto& v : found)
        for (auto& f : v) merged.push_back(std::move(f));
      std::sort(merged.begin(), merged.end(),
                [](const LocalIef& a, const LocalIef& b) { return a.roots < b.roots; });
      merged.erase(std::unique(merged.begin(), merged.end(),
                               [](const LocalIef& a, const LocalIef& b) {
                                 return a.roots == b.roots;
                               }),
                   merged.end());
      for (auto& f : merged) iefs.push_back(std::move(f));
      level_begin = level_end;
      if (level_begin == iefs.size()) break;  // an empty level stays empty above
    }
    std::stable_sort(iefs.begin(), iefs.end(), [](const LocalIef& a, const LocalIef& b) {
      return a.rank != b.rank ? a.rank < b.rank : a.roots < b.roots;
    });
  }

  void build_adjacency() {
    const int wrank = g.rs().rank();
    adj.assign(iefs.size(), {});
    auto parts = chunks_of(iefs.size(), opts.workers);
    auto worker = [&](std::size_t chunk) {
      for (std::size_t i = parts[chunk].first; i < parts[chunk].second; ++i)
        for (std::size_t j = i + 1; j < iefs.size(); ++j) {
          if (iefs[i].rank + iefs[j].rank > wrank) break;  // ids sorted by rank
          if (iefs[j].roots.subset_of(iefs[i].ortho))
            adj[i].push_back(static_cast<std::int32_t>(j));
        }
    };
    run_chunks(parts.size(), worker);
  }

  // joint compatibility of the accumulated flat with iefs[j]: independent
  // spans and no extra root in the combined span
  bool joint_ok(const RootBitset& roots, const RootBitset& mask, const IntEchelon& basis,
                std::int32_t j, IntEchelon& out) {
    out = basis;
    for (const auto& row : iefs[j].basis.rows())
      if (!out.add(row)) return false;
    RootBitset cand =
        ((~mask) & (~iefs[j].ortho) & g.all_mask()).minus(roots | iefs[j].roots);
    bool extra = false;
    cand.for_each([&](int r) {
      if (!extra && g.span_contains(out, r)) extra = true;
    });
    return !extra;
  }

  bool emit(Ctx& ctx, const RootBitset& roots, int rank,
            const std::vector<std::int32_t>& comps) {
    EvenPoset::Element el;
    el.roots = roots;
    el.rank = static_cast<std::int16_t>(rank);
    el.comps = comps;
    ctx.elements.push_back(std::move(el));
    ++ctx.rank_counts[rank];
    if (++produced > opts.element_cap) {
      capped.store(true);
      return false;
    }
    return !capped.load(std::memory_order_relaxed);
  }

  bool grow(Ctx& ctx, const RootBitset& roots, int rank, const RootBitset& mask,
            const IntEchelon& basis, std::vector<std::int32_t>& comps,
            const std::vector<std::int32_t>& cands) {
    const int wrank = g.rs().rank();
    for (std::int32_t j : cands) {
      if (rank + iefs[j].rank > wrank) continue;
      if (!iefs[j].roots.subset_of(mask)) continue;
      IntEchelon ext = g.empty_echelon();
      if (!joint_ok(roots, mask, basis, j, ext)) continue;
      comps.push_back(j);
      const RootBitset child_roots = roots | iefs[j].roots;
      const int child_rank = rank + iefs[j].rank;
      bool keep = emit(ctx, child_roots, child_rank, comps) &&
                  grow(ctx, child_roots, child_rank, mask & iefs[j].ortho, ext, comps, adj[j]);
      comps.pop_back();
      if (!keep) return false;
    }
    return true;
  }

  void assemble() {
    std::vector<std::int32_t> all_ids(iefs.size());
    for (std::size_t i = 0; i < iefs.size(); ++i) all_ids[i] = static_cast<std::int32_t>(i);
    auto parts = chunks_of(iefs.size(), opts.workers);
    std::vector<Ctx> ctxs(parts.size());
    auto worker = [&](std::size_t chunk) {
      Ctx& ctx = ctxs[chunk];
      std::vector<std::int32_t> comps;
      for (std::size_t i = parts[chunk].first; i < parts[chunk].second; ++i) {
        std::vector<std::int32_t> first{static_cast<std::int32_t>(i)};
        if (!grow(ctx, RootBitset{}, 0, g.all_mask(), g.empty_echelon(), comps,
                  first))
          return;
        // grow() with the singleton candidate list emits {i} and its subtree
      }
    };
    run_chunks(parts.size(), worker);
    elements.push_back({});  // the empty flat
    std::map<int, std::size_t> counts{{0, 1}};
    for (auto& ctx : ctxs) {
      for (auto& [r, c] : ctx.rank_counts) counts[r] += c;
      for (auto& el : ctx.elements) elements.push_back(std::move(el));
    }
    if (capped.load())
      throw ResourceLimitError("element cap exceeded while enumerating " + g.rs().type.name(),
                               counts, opts.element_cap);
  }

  void run_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& body) {
    if (n_chunks <= 1) {
      if (n_chunks == 1) body(0);
      return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n_chunks);
    for (std::size_t k = 0; k < n_chunks; ++k)
      pool.emplace_back([&, k] {
        try {
          body(k);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  struct Built {
    std::vector<EvenPoset::Element> elements;
    std::vector<std::int64_t> mobius;
    std::vector<IrreducibleFlat> iefs;
  };

  Built finish() {
    std::sort(elements.begin(), elements.end(),
              [](const EvenPoset::Element& a, const EvenPoset::Element& b) {
                return a.rank != b.rank ? a.rank < b.rank : a.roots < b.roots;
              });
    Built out;
    for (const auto& f : iefs) out.iefs.push_back({f.roots, f.rank, f.type, f.ortho});
    out.elements = std::move(elements);

    // Moebius numbers: each lower order ideal is the product of the even
    // posets of the element's components, so mu is the product of the
    // components' top Moebius numbers. The maximum (when present) is the one
    // element whose single component is the whole type; for it the recursion
    // mu(max) = -sum over everything below means the sum over all others.
    out.mobius.assign(out.elements.size(), 0);
    std::int64_t sum_others = 0;
    std::ptrdiff_t max_idx = -1;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      const auto& el = out.elements[i];
      if (el.rank == g.rs().rank() && el.roots == g.all_mask()) {
        max_idx = static_cast<std::ptrdiff_t>(i);
        continue;
      }
      std::int64_t m = 1;
      for (auto ci : el.comps) {
        std::int64_t f = mu_top(out.iefs[ci].type);
        if (__builtin_mul_overflow(m, f, &m)) throw Error("overflow in Moebius product");
      }
      out.mobius[i] = m;
      if (__builtin_add_overflow(sum_others, m, &sum_others))
        throw Error("overflow in Moebius sum");
    }
    if (max_idx >= 0) {
      out.mobius[max_idx] = -sum_others;
      register_mu_top(out.iefs[out.elements[max_idx].comps[0]].type, -sum_others);
    }
    return out;
  }

  static void register_mu_top(const CoxeterType& t, std::int64_t v);
};

std::map<CoxeterType, std::int64_t>& mu_top_memo() {
  static std::map<CoxeterType, std::int64_t> memo;
  return memo;
}
std::mutex& mu_top_mutex() {
  static std::mutex m;
  return m;
}

void Enumerator::register_mu_top(const CoxeterType& t, std::int64_t v) {
  std::lock_guard<std::mutex> lock(mu_top_mutex());
  mu_top_memo().emplace(t, v);
}

}  // namespace

std::int64_t mu_top(const CoxeterType& type) {
  if (type.rank % 2) throw Error("mu_top is defined for even-rank types only");
  if (type.rank == 2) return -1;  // {0, top}
  {
    std::lock_guard<std::mutex> lock(mu_top_mutex());
    auto it = mu_top_memo().find(type);
    if (it != mu_top_memo().end()) return it->second;
  }
  RootSystem rs = build_root_system(type);
  EvenPoset p = enumerate_even_poset(rs);  // registers the value as a side effect
  std::lock_guard<std::mutex> lock(mu_top_mutex());
  auto it = mu_top_memo().find(type);
  if (it == mu_top_memo().end()) throw Error("mu_top not registered for " + type.name());
  return it->second;
}

EvenPoset enumerate_even_poset(const RootSystem& rs, const EnumOptions& opts) {
  auto shared = std::make_shared<RootSystem>(rs);
  RootGeometry g(shared);
  Enumerator en(g, opts);
  en.find_irreducibles();
  en.build_adjacency();
  en.assemble();
  auto built = en.finish();
  EvenPoset p;
  p.type_ = rs.type;
  p.n_roots_ = g.n();
  p.rs_ = shared;
  p.elements_ = std::move(built.elements);
  p.mobius_ = std::move(built.mobius);
  p.iefs_ = std::move(built.iefs);
  return p;
}

}  // namespace dcp::flats
