// Recursive-descent parser for the polynomial expression grammar.
#include <algorithm>
#include <cctype>

#include "lgmf/polynomial.hpp"

namespace lgmf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const Variable> registry)
      : text_(text), registry_(registry) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Polynomial out = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return out;
  }

 private:
  // expr := ['+'|'-'] term (('+'|'-') term)*
  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial out = term();
    if (negate) out = -out;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      if (c == '+') {
        out += term();
      } else {
        out -= term();
      }
    }
    return out;
  }

  Polynomial term() {
    Polynomial out = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      out *= factor();
    }
    return out;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    Integer e = natural("exponent");
    if (!e.fits_uint_p()) fail("exponent too large");
    return b.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  Polynomial rational() {
    Integer num = natural("integer");
    std::size_t save = pos_;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      Integer den = natural("denominator");
      if (den == 0) fail_at("zero denominator", at);
      Rational r(num, den);
      r.canonicalize();
      return Polynomial(r);
    }
    pos_ = save;
    return Polynomial(Rational(num));
  }

  Polynomial variable() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    while (!at_end() && peek() == '\'') ++pos_;
    Variable v = Variable::parse(text_.substr(start, pos_ - start));
    if (std::find(registry_.begin(), registry_.end(), v) == registry_.end()) {
      throw UndeclaredVariable(v.str());
    }
    return Polynomial(v);
  }

  Integer natural(const char* what) {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  std::string_view text_;
  std::span<const Variable> registry_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::span<const Variable> registry) {
  return Parser(text, registry).parse();
}

}  // namespace lgmf
