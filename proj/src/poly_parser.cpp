#include "inireg/poly_parser.hpp"

#include <cctype>

#include "inireg/rational.hpp"

namespace inireg {

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line;
  int base_column;

  int column() const { return base_column + static_cast<int>(pos); }
  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void skip_ws() {
    while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, column(), msg); }
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_identifier(Cursor& cur) {
  size_t start = cur.pos;
  while (!cur.done() && is_ident_char(cur.text[cur.pos])) ++cur.pos;
  return std::string(cur.text.substr(start, cur.pos - start));
}

Integer read_natural(Cursor& cur) {
  if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.fail("expected a number");
  size_t start = cur.pos;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  return Integer(std::string(cur.text.substr(start, cur.pos - start)));
}

int read_exponent(Cursor& cur) {
  Integer e = read_natural(cur);
  if (e > 100000) cur.fail("malformed exponent: too large");
  return static_cast<int>(e);
}

// factor := number ('/' number)? | ident ('^' nat)?
// Accumulates into (coeff, mono).
void parse_factor(Cursor& cur, const Ring& ring, Rational& coeff, Monomial& mono) {
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    Integer num = read_natural(cur);
    if (cur.peek() == '/') {
      ++cur.pos;
      int denom_col = cur.column();
      Integer den = read_natural(cur);
      if (den == 0) throw ParseError(cur.line, denom_col, "zero denominator");
      coeff *= Rational(num, den);
    } else {
      coeff *= Rational(num);
    }
    return;
  }
  if (is_ident_start(cur.peek())) {
    int name_col = cur.column();
    std::string name = read_identifier(cur);
    auto idx = ring.index_of(name);
    if (!idx) throw ParseError(cur.line, name_col, "unknown variable '" + name + "'");
    int power = 1;
    if (cur.peek() == '^') {
      ++cur.pos;
      if (cur.done()) cur.fail("malformed exponent");
      power = read_exponent(cur);
    }
    mono = mono * Monomial::variable(ring.size(), *idx, power);
    return;
  }
  cur.fail(cur.done() ? "unexpected end of polynomial" : std::string("unexpected character '") + cur.peek() + "'");
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, int line, int column) {
  Cursor cur{text, 0, line, column};
  Polynomial result(ring.size());

  cur.skip_ws();
  if (cur.done()) cur.fail("empty polynomial");

  bool negative = false;
  if (cur.peek() == '+' || cur.peek() == '-') {
    negative = cur.peek() == '-';
    ++cur.pos;
  }
  while (true) {
    cur.skip_ws();
    Rational coeff = negative ? -1 : 1;
    Monomial mono = Monomial::one(ring.size());
    parse_factor(cur, ring, coeff, mono);
    cur.skip_ws();
    while (cur.peek() == '*') {
      ++cur.pos;
      cur.skip_ws();
      parse_factor(cur, ring, coeff, mono);
      cur.skip_ws();
    }
    result.add_term(mono, coeff);
    if (cur.done()) break;
    if (cur.peek() == '+' || cur.peek() == '-') {
      negative = cur.peek() == '-';
      ++cur.pos;
      cur.skip_ws();
      if (cur.done()) cur.fail("trailing operator");
    } else {
      cur.fail(std::string("unexpected character '") + cur.peek() + "'");
    }
  }
  return result;
}

}  // namespace inireg
