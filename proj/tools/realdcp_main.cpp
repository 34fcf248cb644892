#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "realdcp/charpoly_formulas.hpp"
#include "realdcp/dowling.hpp"
#include "realdcp/graded_ch.hpp"
#include "realdcp/h1.hpp"
#include "realdcp/onedim.hpp"
#include "realdcp/poset_cache.hpp"
#include "realdcp/poset_checks.hpp"
#include "realdcp/report.hpp"

namespace fs = std::filesystem;
using namespace dcp;
using flats::EnumOptions;
using flats::EvenPoset;
using rootsys::CoxeterType;
using rootsys::Family;

namespace {

struct Common {
  std::string type_str;
  std::string format = "text";
  std::string cache_dir;
  std::size_t cap = 100000000;
  int workers = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--type", c.type_str, "Coxeter type, e.g. B5, E7, H3, I2(7)")->required();
  cmd->add_option("--format", c.format, "output format: text, json, csv, latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  cmd->add_option("--cache-dir", c.cache_dir,
                  "poset cache directory (also REALDCP_CACHE_DIR)");
  cmd->add_option("--cap", c.cap, "element cap for the poset enumeration")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", c.workers, "worker threads for the enumeration")
      ->check(CLI::PositiveNumber);
}

std::string cache_dir_of(const Common& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* env = std::getenv("REALDCP_CACHE_DIR")) return env;
  return {};
}

bool needs_synthetic(const CoxeterType& t) {
  return t.family == Family::I2 && t.m != 3 && t.m != 4 && t.m != 5 && t.m != 6;
}

EvenPoset get_poset(const CoxeterType& t, const Common& c) {
  if (needs_synthetic(t)) return flats::synthetic_i2(t.m);
  std::string dir = cache_dir_of(c);
  if (!dir.empty()) {
    fs::path path = fs::path(dir) / flats::cache_file_name(t);
    if (fs::exists(path)) {
      EvenPoset p = flats::load_poset_file(path.string());
      if (p.type() != t) throw ParseError("cache file type mismatch at " + path.string());
      return p;
    }
  }
  return flats::enumerate_even_poset(rootsys::build_root_system(t),
                                     EnumOptions{c.cap, c.workers});
}

std::string latex_poly(const flats::CharPoly& p) {
  std::string s = "$";
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    std::int64_t c = p.coeffs[k];
    if (c == 0 && !(k == 0 && p.coeffs.size() == 1)) continue;
    std::int64_t a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (k == 0 || a != 1) s += std::to_string(a);
    if (k >= 1) s += "t";
    if (k > 1) s += "^{" + std::to_string(k) + "}";
  }
  return s + "$";
}

int cmd_poincare(const Common& c) {
  CoxeterType t = rootsys::parse_coxeter_type(c.type_str);
  EvenPoset p = get_poset(t, c);
  flats::CharPoly chi = p.char_poly();
  if (c.format == "json") {
    std::cout << "{\"type\": \"" << t.name() << "\", \"poincare\": \"" << chi.str()
              << "\", \"coefficients\": [";
    for (std::size_t k = 0; k < chi.coeffs.size(); ++k)
      std::cout << (k ? ", " : "") << chi.coeffs[k];
    std::cout << "]}\n";
  } else if (c.format == "csv") {
    std::cout << "power,coefficient\n";
    for (std::size_t k = 0; k < chi.coeffs.size(); ++k)
      std::cout << k << "," << chi.coeffs[k] << "\n";
  } else if (c.format == "latex") {
    std::cout << latex_poly(chi) << "\n";
  } else {
    std::cout << chi.str() << "\n";
  }
  return 0;
}

int cmd_betti(const Common& c) {
  CoxeterType t = rootsys::parse_coxeter_type(c.type_str);
  EvenPoset p = get_poset(t, c);
  auto b = p.betti_numbers();
  if (c.format == "json") {
    std::cout << "{\"type\": \"" << t.name() << "\", \"betti\": [";
    for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? ", " : "") << b[i];
    std::cout << "]}\n";
  } else if (c.format == "csv") {
    std::cout << "degree,betti\n";
    for (std::size_t i = 0; i < b.size(); ++i) std::cout << i << "," << b[i] << "\n";
  } else if (c.format == "latex") {
    std::cout << "$(";
    for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? ", " : "") << b[i];
    std::cout << ")$\n";
  } else {
    for (std::size_t i = 0; i < b.size(); ++i)
      std::cout << "b_" << i << " = " << b[i] << "\n";
  }
  return 0;
}

int cmd_euler(const Common& c) {
  CoxeterType t = rootsys::parse_coxeter_type(c.type_str);
  EvenPoset p = get_poset(t, c);
  std::int64_t poset_value = p.euler_characteristic();
  bool have_closed = false;
  std::int64_t closed = 0;
  if (t.rank % 2 == 1 && t.rank >= 3) {
    if (t.family == Family::A) {
      closed = flats::type_a_euler_closed_form(t.rank);
      have_closed = true;
    } else if (t.family == Family::B) {
      closed = flats::type_b_euler_closed_form(t.rank);
      have_closed = true;
    } else if (t.family == Family::D) {
      closed = flats::type_d_euler_closed_form(t.rank);
      have_closed = true;
    }
  }
  if (have_closed && closed != poset_value)
    throw ConsistencyError("euler-closed-form",
                           "poset gives " + std::to_string(poset_value) + ", closed form " +
                               std::to_string(closed));
  if (c.format == "json") {
    std::cout << "{\"type\": \"" << t.name() << "\", \"euler\": " << poset_value;
    if (have_closed)
      std::cout << ", \"closed_form\": " << closed << ", \"agree\": true";
    std::cout << "}\n";
  } else if (c.format == "csv") {
    std::cout << "euler,closed_form,agree\n"
              << poset_value << ","
              << (have_closed ? std::to_string(closed) : std::string()) << ","
              << (have_closed ? "true" : "") << "\n";
  } else {
    std::cout << "chi(" << t.name() << ") = " << poset_value;
    if (have_closed) std::cout << "  (closed form " << closed << ", agree)";
    std::cout << "\n";
  }
  return 0;
}

int cmd_character(const Common& c) {
  CoxeterType t = rootsys::parse_coxeter_type(c.type_str);
  if (t.family != Family::A && t.family != Family::B && t.family != Family::D)
    throw ParseError("character reports exist for the classical families A, B, D only");
  EvenPoset p = get_poset(t, c);
  VerifyOptions vo;
  vo.enum_opts = EnumOptions{c.cap, c.workers};
  auto checks = verify_type(t, vo);
  std::string json = character_report_json(t, p, checks);
  if (c.format == "json" || c.format == "text") {
    std::cout << json;
  } else {
    throw ParseError("character reports support text (JSON body) and json formats");
  }
  for (const auto& r : checks)
    if (r.status == "FAIL")
      throw ConsistencyError(r.name, r.detail);
  return 0;
}

int cmd_multiplicities(const Common& c) {
  CoxeterType t = rootsys::parse_coxeter_type(c.type_str);
  std::vector<std::array<std::string, 5>> rows;  // group, chi, degree, inner, closed
  if (t.family == Family::B) {
    for (const auto& r : charcalc::one_dim_multiplicities(t.rank))
      rows.push_back({"W(B)", charcalc::one_dim_name(r.chi), std::to_string(r.degree),
                      r.inner.get_str(), std::to_string(r.closed)});
  } else if (t.family == Family::D) {
    for (const auto& r : charcalc::type_d_one_dim_multiplicities(t.rank))
      rows.push_back({r.group, r.chi, std::to_string(r.degree), r.inner.get_str(),
                      std::to_string(r.closed)});
  } else {
    throw ParseError("multiplicity tables exist for types B and D");
  }
  if (c.format == "json") {
    std::cout << "{\"type\": \"" << t.name() << "\", \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << "{\"group\": \"" << rows[i][0] << "\", \"character\": \"" << rows[i][1]
                << "\", \"degree\": " << rows[i][2] << ", \"inner\": \"" << rows[i][3]
                << "\", \"closed\": " << rows[i][4] << "}";
    }
    std::cout << "]}\n";
  } else if (c.format == "csv") {
    std::cout << "group,character,degree,inner_product,closed_form\n";
    for (const auto& r : rows)
      std::cout << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << "," << r[4] << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << r[0] << "  <H^" << r[2] << ", " << r[1] << "> = " << r[3]
                << "  (closed form " << r[4] << ", agree)\n";
  }
  return 0;
}

int cmd_h1(const Common& c) {
  CoxeterType t = rootsys::parse_coxeter_type(c.type_str);
  if (t.family != Family::B) throw ParseError("the h1 report is for type B");
  int n = t.rank;
  if (n < 2) throw ParseError("the h1 report requires rank >= 2");
  auto basis = h1sigma::h1_basis(n);
  auto sp = h1sigma::sigma_spectrum(n);
  auto lef = h1sigma::lefschetz_sigma(n);
  auto ch = h1sigma::h1_character(n);
  if (c.format == "json") {
    std::cout << "{\"type\": \"" << t.name() << "\", \"dim\": " << basis.size()
              << ", \"sigma_plus\": " << sp.dim_plus << ", \"sigma_minus\": " << sp.dim_minus
              << ", \"sigma_trace\": " << sp.trace << ", \"lefschetz\": " << lef << "}\n";
  } else {
    std::cout << "dim H^1 = " << basis.size() << "\n"
              << "sigma eigenspaces: +1 of dimension " << sp.dim_plus
              << ", -1 of dimension " << sp.dim_minus << " (trace " << sp.trace << ")\n"
              << "Lefschetz number of sigma = " << lef << "\n"
              << "character at identity = " << ch.at_identity().get_str() << "\n";
  }
  return 0;
}

int cmd_poset_export(const Common& c) {
  CoxeterType t = rootsys::parse_coxeter_type(c.type_str);
  EvenPoset p = get_poset(t, c);
  std::string dir = cache_dir_of(c);
  if (dir.empty()) dir = ".";
  fs::create_directories(dir);
  fs::path path = fs::path(dir) / flats::cache_file_name(t);
  flats::save_poset_file(p, path.string());
  std::cout << "wrote " << path.string() << " (" << p.size() << " elements, "
            << p.covers().size() << " covers)\n";
  return 0;
}

int cmd_verify(const Common& c) {
  CoxeterType t = rootsys::parse_coxeter_type(c.type_str);
  VerifyOptions vo;
  vo.enum_opts = EnumOptions{c.cap, c.workers};
  auto results = verify_type(t, vo);
  for (const auto& r : results) {
    std::cout << r.status << " " << t.name() << " " << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
  }
  for (const auto& r : results)
    if (r.status == "FAIL") throw ConsistencyError(r.name, r.detail);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology of real De Concini-Procesi models of Coxeter type"};
  app.require_subcommand(1);

  Common c;
  auto* poincare = app.add_subcommand("poincare", "characteristic (Poincare) polynomial");
  auto* betti = app.add_subcommand("betti", "Betti numbers");
  auto* euler = app.add_subcommand("euler", "Euler characteristic, with closed form when known");
  auto* character = app.add_subcommand("character", "graded character report (A, B, D)");
  auto* mult = app.add_subcommand("multiplicities", "one-dimensional multiplicity table (B, D)");
  auto* h1 = app.add_subcommand("h1", "degree-one cohomology and the extra involution (B)");
  auto* pexport = app.add_subcommand("poset-export", "write the poset cache file");
  auto* verify = app.add_subcommand("verify", "run every named cross-check for the type");
  for (auto* cmd : {poincare, betti, euler, character, mult, h1, pexport, verify})
    add_common(cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (poincare->parsed()) return cmd_poincare(c);
    if (betti->parsed()) return cmd_betti(c);
    if (euler->parsed()) return cmd_euler(c);
    if (character->parsed()) return cmd_character(c);
    if (mult->parsed()) return cmd_multiplicities(c);
    if (h1->parsed()) return cmd_h1(c);
    if (pexport->parsed()) return cmd_poset_export(c);
    if (verify->parsed()) return cmd_verify(c);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    std::cerr << "elements found per flat rank before the cap:\n";
    for (const auto& [rank, count] : e.level_counts)
      std::cerr << "  rank " << rank << ": " << count << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
