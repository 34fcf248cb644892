#include "realdcp/poset_cache.hpp"

#include <fstream>
#include <queue>

#include <json.hpp>

namespace dcp::flats {

using nlohmann::json;

void save_poset(const EvenPoset& p, std::ostream& out) {
  json j;
  j["format_version"] = kPosetCacheFormatVersion;
  j["type"] = p.type().name();
  j["rank"] = p.w_rank();
  j["n_roots"] = p.n_roots();
  j["element_count"] = p.size();
  json flats = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json f = json::array();
    p.element(i).roots.for_each([&](int r) { f.push_back(r); });
    flats.push_back(std::move(f));
  }
  j["flats"] = std::move(flats);
  json covers = json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back(json::array({lo, hi}));
  j["covers"] = std::move(covers);
  j["mobius"] = p.mobius();
  out << j.dump(1, '\t') << "\n";
}

void save_poset_file(const EvenPoset& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open cache file for writing: " + path);
  save_poset(p, out);
}

EvenPoset load_poset(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed poset cache: ") + e.what());
  }
  if (!j.contains("format_version") || j["format_version"].get<int>() != kPosetCacheFormatVersion)
    throw ParseError("unsupported poset cache format version");
  CoxeterType type = rootsys::parse_coxeter_type(j["type"].get<std::string>());
  int n_roots = j["n_roots"].get<int>();
  auto flats = j["flats"];
  std::size_t L = flats.size();
  if (j["element_count"].get<std::size_t>() != L)
    throw ParseError("poset cache element count mismatch");

  std::vector<EvenPoset::Element> elements(L);
  for (std::size_t i = 0; i < L; ++i)
    for (const auto& r : flats[i]) elements[i].roots.set(r.get<int>());

  std::vector<std::pair<std::int32_t, std::int32_t>> covers;
  std::vector<std::vector<std::int32_t>> ups(L);
  for (const auto& c : j["covers"]) {
    std::int32_t lo = c[0].get<std::int32_t>(), hi = c[1].get<std::int32_t>();
    covers.emplace_back(lo, hi);
    ups[lo].push_back(hi);
  }
  std::vector<std::int64_t> mobius = j["mobius"].get<std::vector<std::int64_t>>();
  if (mobius.size() != L) throw ParseError("poset cache mobius length mismatch");

  // poset ranks from the cover relations (every cover is one level)
  std::vector<int> level(L, -1);
  std::queue<std::size_t> q;
  for (std::size_t i = 0; i < L; ++i)
    if (elements[i].roots.empty()) {
      level[i] = 0;
      q.push(i);
    }
  while (!q.empty()) {
    std::size_t x = q.front();
    q.pop();
    for (auto y : ups[x])
      if (level[y] < 0) {
        level[y] = level[x] + 1;
        q.push(y);
      }
  }
  for (std::size_t i = 0; i < L; ++i) {
    if (level[i] < 0) throw ParseError("poset cache covers do not reach element " +
                                       std::to_string(i));
    elements[i].rank = static_cast<std::int16_t>(2 * level[i]);
  }
  return EvenPoset::from_parts(type, n_roots, std::move(elements), std::move(mobius),
                               std::move(covers));
}

EvenPoset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open cache file: " + path);
  return load_poset(in);
}

std::string cache_file_name(const CoxeterType& t) {
  std::string n = t.name();
  // I2(m) -> I2_m to stay filesystem friendly
  std::string out;
  for (char c : n) {
    if (c == '(') out += '_';
    else if (c != ')') out += c;
  }
  return out + ".poset.json";
}

}  // namespace dcp::flats
