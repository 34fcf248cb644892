#include "realdcp/coxeter_type.hpp"

#include <cctype>

namespace dcp::rootsys {

void CoxeterType::validate() const {
  switch (family) {
    case Family::A:
      if (rank < 1) throw ParseError("type A requires rank >= 1");
      return;
    case Family::B:
      if (rank < 1) throw ParseError("type B requires rank >= 1");
      return;
    case Family::D:
      if (rank < 2) throw ParseError("type D requires rank >= 2");
      return;
    case Family::E:
      if (rank < 6 || rank > 8) throw ParseError("type E exists only for ranks 6, 7, 8");
      return;
    case Family::F:
      if (rank != 4) throw ParseError("type F exists only for rank 4");
      return;
    case Family::H:
      if (rank < 3 || rank > 4) throw ParseError("type H exists only for ranks 3, 4");
      return;
    case Family::I2:
      if (rank != 2) throw ParseError("type I2 has rank 2");
      if (m < 3) throw ParseError("type I2(m) requires m >= 3");
      return;
  }
  throw ParseError("unknown family");
}

long CoxeterType::positive_root_count() const {
  long n = rank;
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::H: return rank == 3 ? 15 : 60;
    case Family::I2: return m;
  }
  return 0;
}

std::string CoxeterType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F4";
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

CoxeterType parse_coxeter_type(const std::string& s) {
  if (s.empty()) throw ParseError("empty Coxeter type string");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string rest = s.substr(1);
  auto parse_int = [&](const std::string& t) -> int {
    if (t.empty()) throw ParseError("missing rank in type string '" + s + "'");
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad rank in type string '" + s + "'");
    return std::stoi(t);
  };
  switch (fam) {
    case 'A': return CoxeterType::A(parse_int(rest));
    case 'B':
    case 'C': return CoxeterType::B(parse_int(rest));  // B and C give the same arrangement
    case 'D': return CoxeterType::D(parse_int(rest));
    case 'E': return CoxeterType::E(parse_int(rest));
    case 'F':
      if (parse_int(rest) != 4) throw ParseError("type F exists only for rank 4");
      return CoxeterType::F4();
    case 'H': return CoxeterType::H(parse_int(rest));
    case 'G':
      if (parse_int(rest) != 2) throw ParseError("type G exists only for rank 2");
      return CoxeterType::I(6);
    case 'I': {
      // accept I2(m) and I2_m
      if (rest.size() < 2 || rest[0] != '2')
        throw ParseError("dihedral types are written I2(m): '" + s + "'");
      std::string t = rest.substr(1);
      if (!t.empty() && (t[0] == '(' || t[0] == '_')) {
        bool paren = t[0] == '(';
        t = t.substr(1);
        if (paren) {
          if (t.empty() || t.back() != ')') throw ParseError("unbalanced parens in '" + s + "'");
          t.pop_back();
        }
        return CoxeterType::I(parse_int(t));
      }
      throw ParseError("dihedral types are written I2(m): '" + s + "'");
    }
    default: throw ParseError("unknown Coxeter family '" + std::string(1, fam) + "'");
  }
}

}  // namespace dcp::rootsys
