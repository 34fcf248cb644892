#include <cctype>
#include <sstream>

#include "realdcp/sym_b.hpp"

namespace dcp::symfunc {

namespace {

std::string partition_text(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts[i]);
  }
  return s + "]";
}

// ---- parsing -------------------------------------------------------------

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError("expected '" + std::string(1, c) + "' at position " +
                                  std::to_string(i) + " in symmetric function text");
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }

  long integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ParseError("expected integer at position " + std::to_string(start));
    return std::stol(s.substr(start, i - start));
  }

  Rational rational() {
    Integer num(integer());
    if (eat('/')) {
      Integer den(integer());
      if (den == 0) throw ParseError("zero denominator");
      return ratio(num, den);
    }
    return Rational(num);
  }

  // rat [* s^k] | s^k, with optional unary sign already consumed by caller
  Laurent laurent_term() {
    skip_ws();
    if (i < s.size() && s[i] == 's') {
      ++i;
      expect('^');
      return Laurent::s_power(static_cast<int>(integer()));
    }
    Rational c = rational();
    if (peek('*')) {
      std::size_t save = i;
      ++i;
      skip_ws();
      if (i < s.size() && s[i] == 's') {
        ++i;
        expect('^');
        return Laurent::s_power(static_cast<int>(integer()), c);
      }
      i = save;  // the '*' belonged to the monomial
    }
    return Laurent(c);
  }

  Laurent laurent() {
    Laurent out;
    bool neg = eat('-');
    if (!neg) eat('+');
    Laurent t = laurent_term();
    out += neg ? -t : t;
    while (true) {
      skip_ws();
      if (peek('+') || peek('-')) {
        bool minus = eat('-');
        if (!minus) eat('+');
        Laurent u = laurent_term();
        out += minus ? -u : u;
      } else {
        break;
      }
    }
    return out;
  }

  Partition plist() {
    expect('[');
    Partition p;
    if (!peek(']'))
      while (true) {
        p.parts.push_back(static_cast<int>(integer()));
        if (!eat(',')) break;
      }
    expect(']');
    p.normalize();
    return p;
  }
};

}  // namespace

std::string SymA::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") * p" << partition_text(lam);
  }
  return os.str();
}

std::string SymB::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lm, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") * x" << partition_text(lm.first) << "y"
       << partition_text(lm.second);
  }
  return os.str();
}

SymA parse_sym_a(const std::string& text, int truncation) {
  SymA f(truncation);
  Cursor c{text};
  c.skip_ws();
  if (text == "0" || c.done()) return f;
  while (true) {
    c.expect('(');
    Laurent coeff = c.laurent();
    c.expect(')');
    c.expect('*');
    c.skip_ws();
    c.expect('p');
    Partition lam = c.plist();
    if (lam.size() > truncation)
      throw ParseError("term of degree " + std::to_string(lam.size()) +
                       " exceeds truncation " + std::to_string(truncation));
    f.accumulate(lam, coeff);
    if (c.done()) break;
    c.expect('+');
  }
  return f;
}

SymB parse_sym_b(const std::string& text, int truncation) {
  SymB f(truncation);
  Cursor c{text};
  c.skip_ws();
  if (text == "0" || c.done()) return f;
  while (true) {
    c.expect('(');
    Laurent coeff = c.laurent();
    c.expect(')');
    c.expect('*');
    c.skip_ws();
    c.expect('x');
    Partition lam = c.plist();
    c.expect('y');
    Partition mu = c.plist();
    if (lam.size() + mu.size() > truncation)
      throw ParseError("term exceeds truncation " + std::to_string(truncation));
    f.accumulate({lam, mu}, coeff);
    if (c.done()) break;
    c.expect('+');
  }
  return f;
}

}  // namespace dcp::symfunc
