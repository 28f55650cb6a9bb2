#include "equinoether/polyparse.hpp"

#include <cctype>

#include "equinoether/errors.hpp"

namespace equinoether {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }

  mpz_class integer() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }

  int small_index(const char* what) {
    std::size_t start = pos;
    mpz_class n = integer();
    if (!n.fits_sint_p() || n < 1) {
      pos = start;
      fail(std::string(what) + " must be a positive machine integer");
    }
    return static_cast<int>(n.get_si());
  }
};

struct TermData {
  Rational coeff;
  std::vector<std::pair<Variable, int>> factors;
  std::optional<VarShape> shape;
};

void parse_factor(Cursor& cur, TermData& term) {
  VarShape shape = cur.peek() == 'y' ? VarShape::Pair : VarShape::RowColumn;
  ++cur.pos;  // letter already validated by caller
  if (term.shape && *term.shape != shape)
    cur.fail("mixed variable shapes in one polynomial");
  term.shape = shape;
  cur.skip_ws();
  if (!cur.eat('[')) cur.fail("expected '[' after variable letter");
  cur.skip_ws();
  int row = cur.small_index("variable index");
  cur.skip_ws();
  if (!cur.eat(',')) cur.fail("expected ',' in variable");
  cur.skip_ws();
  int col = cur.small_index("variable index");
  cur.skip_ws();
  if (!cur.eat(']')) cur.fail("expected ']' closing variable");
  int exp = 1;
  std::size_t save = cur.pos;
  cur.skip_ws();
  if (cur.eat('^')) {
    cur.skip_ws();
    exp = cur.small_index("exponent");
  } else {
    cur.pos = save;
  }
  term.factors.emplace_back(Variable{row, col}, exp);
}

Rational parse_number(Cursor& cur) {
  mpz_class num = cur.integer();
  std::size_t save = cur.pos;
  cur.skip_ws();
  if (cur.eat('/')) {
    cur.skip_ws();
    std::size_t denom_pos = cur.pos;
    mpz_class den = cur.integer();
    if (den == 0) throw ParseError("zero denominator", denom_pos);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  cur.pos = save;
  return Rational(num);
}

// one term: [number ['*']] factor ('*' factor)*
void parse_term(Cursor& cur, bool negative,
                std::vector<std::pair<Monomial, Rational>>& out,
                std::optional<VarShape>& poly_shape) {
  TermData term;
  term.coeff = 1;
  bool saw_number = false, saw_factor = false;
  cur.skip_ws();
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    term.coeff = parse_number(cur);
    saw_number = true;
  }
  for (;;) {
    std::size_t save = cur.pos;
    cur.skip_ws();
    if ((saw_number || saw_factor) && !cur.eat('*')) {
      cur.pos = save;
      break;
    }
    cur.skip_ws();
    if (cur.peek() != 'x' && cur.peek() != 'y') {
      if (!saw_number && !saw_factor) cur.fail("expected a term");
      cur.fail("expected a variable after '*'");
    }
    parse_factor(cur, term);
    saw_factor = true;
  }
  if (!saw_number && !saw_factor) cur.fail("expected a term");
  if (term.shape && poly_shape && *term.shape != *poly_shape)
    cur.fail("mixed variable shapes in one polynomial");
  if (term.shape) poly_shape = term.shape;
  Monomial m = term.factors.empty()
                   ? Monomial()
                   : Monomial::product(*term.shape, std::move(term.factors));
  out.emplace_back(std::move(m),
                   negative ? Rational(-term.coeff) : term.coeff);
}

}  // namespace

Poly parse_polynomial(std::string_view text) {
  Cursor cur{text};
  std::vector<std::pair<Monomial, Rational>> terms;
  std::optional<VarShape> shape;
  cur.skip_ws();
  if (cur.done()) cur.fail("empty polynomial");
  bool negative = cur.eat('-');
  if (!negative) cur.eat('+');
  parse_term(cur, negative, terms, shape);
  for (;;) {
    cur.skip_ws();
    if (cur.done()) break;
    if (cur.eat('-'))
      negative = true;
    else if (cur.eat('+'))
      negative = false;
    else
      cur.fail("expected '+', '-', or end of input");
    parse_term(cur, negative, terms, shape);
  }
  return Poly::from_terms(std::move(terms));
}

Monomial parse_monomial(std::string_view text) {
  Poly p = parse_polynomial(text);
  if (p.term_count() != 1 || !(p.leading_coefficient() == Rational(1)))
    throw ParseError("expected a single monomial with coefficient 1", 0);
  return p.leading_monomial();
}

std::string print_polynomial(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (m.is_one()) {
      out += to_string(a);
    } else {
      if (!(a == Rational(1))) out += to_string(a) + "*";
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace equinoether
