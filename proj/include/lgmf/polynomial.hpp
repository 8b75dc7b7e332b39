#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgmf/errors.hpp"
#include "lgmf/rational.hpp"

namespace lgmf {

/// A named indeterminate. `prime_level` counts apostrophes: x (0), x' (1).
///
/// Variables are totally ordered by name, then by prime level; the monomial
/// order and every printed form depend on it.
struct Variable {
  std::string name;
  unsigned prime_level = 0;

  Variable() = default;
  Variable(std::string name, unsigned prime_level = 0);

  /// Parses `x`, `x'`, `x''`, ... Throws ParseError on a malformed identifier.
  static Variable parse(std::string_view text);

  Variable primed() const { return Variable(name, prime_level + 1); }
  Variable base() const { return Variable(name, 0); }
  std::string str() const;

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

std::ostream& operator<<(std::ostream& os, const Variable& v);

/// Power product with strictly increasing variables and positive exponents.
class Monomial {
 public:
  using Power = std::pair<Variable, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Power> powers);
  static Monomial of(const Variable& v, unsigned exponent = 1);

  const std::vector<Power>& powers() const { return powers_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(const Variable& v) const;
  bool is_one() const { return powers_.empty(); }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;

  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Power> powers_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order, greatest first: total degree decides, then the
/// exponent of the smallest variable where the two monomials differ.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The term map never stores a zero coefficient, so equal polynomials have
/// identical term maps and `operator==` is structural.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(int c);
  Polynomial(const Rational& c);
  Polynomial(const Variable& v);
  Polynomial(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const;
  std::vector<Variable> variables() const;

  /// Leading term under GrlexGreater. Requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned exponent) const;

  /// Canonical text: graded-lex order, explicit '*', '^' only for exponents >= 2.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Simultaneous substitution; variables absent from the map are left alone.
using Substitution = std::map<Variable, Polynomial>;

Polynomial substitute(const Polynomial& f, const Substitution& map);

/// Thrown when a division leaves a nonzero remainder.
class InexactDivision : public Error {
 public:
  explicit InexactDivision(Polynomial remainder);
  const Polynomial& remainder() const noexcept { return remainder_; }

 private:
  Polynomial remainder_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division by a single divisor under the graded-lex order.
DivisionResult divide(const Polynomial& num, const Polynomial& den);

/// Returns q with q * den == num, or throws InexactDivision carrying the remainder.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

/// The map ^{t_1...t_k}: replaces vars[0..k) by their primed copies.
Polynomial prime_prefix(const Polynomial& h, std::span<const Variable> vars, std::size_t k);

/// Difference quotient for the generator `i` (1-based) over the ordered
/// unprimed variables `vars`:
///   [ (^{t_1..t_{i-1}} h) - (^{t_1..t_i} h) ] / (x_i - x_i').
/// `h` may already contain primed variables.
Polynomial diff_quotient(const Polynomial& h, std::span<const Variable> vars, std::size_t i);

/// Formal partial derivative.
Polynomial derivative(const Polynomial& f, const Variable& v);

/// Parses the polynomial grammar. Every variable must appear in `registry`.
Polynomial parse_poly(std::string_view text, std::span<const Variable> registry);

/// Parses a comma-separated variable list such as "x,y,x'".
std::vector<Variable> parse_variable_list(std::string_view text);

}  // namespace lgmf
