#include "realdcp/report.hpp"

#include <json.hpp>

#include "realdcp/class_fn.hpp"
#include "realdcp/graded_ch.hpp"
#include "realdcp/onedim.hpp"

namespace dcp {

using nlohmann::ordered_json;
using rootsys::Family;

namespace {

std::string class_label(const charcalc::PartitionPair& cls) {
  return cls.first.str() + ";" + cls.second.str();
}

ordered_json class_table_json(const charcalc::BClassFunction& f) {
  ordered_json j = ordered_json::object();
  for (const auto& [cls, v] : f.values) j[class_label(cls)] = v.get_str();
  return j;
}

}  // namespace

std::string character_report_json(const rootsys::CoxeterType& t,
                                  const flats::EvenPoset& poset,
                                  const std::vector<CheckResult>& checks) {
  ordered_json j;
  j["type"] = t.name();
  j["n"] = t.rank;
  j["poincare"] = poset.char_poly().str();
  j["betti"] = poset.betti_numbers();
  j["euler_characteristic"] = poset.euler_characteristic();

  const int n = t.rank;
  if (t.family == Family::A) {
    auto a = charcalc::type_a_graded_ch(n + 1);
    ordered_json per = ordered_json::array();
    for (const auto& f : a.per_degree) per.push_back(f.str());
    j["per_degree"] = std::move(per);
    j["symmetric_group"] = "S" + std::to_string(n + 1);
  } else if (t.family == Family::B || t.family == Family::D) {
    charcalc::GradedChB g =
        t.family == Family::B ? charcalc::type_b_graded_ch(n) : charcalc::type_d_graded_ch(n);
    ordered_json per = ordered_json::array();
    for (const auto& f : g.per_degree) per.push_back(f.str());
    j["per_degree"] = std::move(per);
    ordered_json tables = ordered_json::array();
    for (std::size_t i = 0; i < g.per_degree.size(); ++i) {
      ordered_json row;
      row["degree"] = i;
      row["class_table"] = class_table_json(charcalc::class_function(
          g.per_degree[i].retruncated(n).homogeneous_part(n).retruncated(n), n));
      tables.push_back(std::move(row));
    }
    j["class_tables"] = std::move(tables);
    if (t.family == Family::B) {
      ordered_json mult = ordered_json::array();
      for (const auto& row : charcalc::one_dim_multiplicities(n)) {
        ordered_json r;
        r["character"] = charcalc::one_dim_name(row.chi);
        r["degree"] = row.degree;
        r["inner_product"] = row.inner.get_str();
        r["closed_form"] = row.closed;
        r["agree"] = row.agree;
        mult.push_back(std::move(r));
      }
      j["one_dim_multiplicities"] = std::move(mult);
    }
  }

  ordered_json ch = ordered_json::object();
  for (const auto& c : checks) ch[c.name] = c.status;
  j["checks"] = std::move(ch);
  return j.dump(1, '\t') + "\n";
}

}  // namespace dcp
