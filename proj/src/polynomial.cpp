#include "lgmf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lgmf {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || s.front() == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

// ---------------------------------------------------------------------------
// Variable

Variable::Variable(std::string n, unsigned p) : name(std::move(n)), prime_level(p) {
  if (!is_identifier(name)) {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
}

Variable Variable::parse(std::string_view text) {
  std::size_t end = text.size();
  while (end > 0 && text[end - 1] == '\'') --end;
  auto name = text.substr(0, end);
  if (!is_identifier(name)) {
    throw ParseError("invalid variable '" + std::string(text) + "'", 0);
  }
  return Variable(std::string(name), static_cast<unsigned>(text.size() - end));
}

std::string Variable::str() const { return name + std::string(prime_level, '\''); }

std::ostream& operator<<(std::ostream& os, const Variable& v) { return os << v.str(); }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const Power& a, const Power& b) { return a.first < b.first; });
  for (auto& [v, e] : powers) {
    if (e == 0) continue;
    if (!powers_.empty() && powers_.back().first == v) {
      powers_.back().second += e;
    } else {
      powers_.emplace_back(std::move(v), e);
    }
    degree_ += e;
  }
}

Monomial Monomial::of(const Variable& v, unsigned exponent) {
  return Monomial(std::vector<Power>{{v, exponent}});
}

unsigned Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), v,
                             [](const Power& p, const Variable& x) { return p.first < x; });
  return (it != powers_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.powers_.begin();
  for (const auto& [v, e] : powers_) {
    while (it != other.powers_.end() && it->first < v) ++it;
    if (it == other.powers_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  auto d = divisor.powers_.begin();
  for (const auto& [v, e] : powers_) {
    unsigned sub = 0;
    if (d != divisor.powers_.end() && d->first == v) {
      sub = d->second;
      ++d;
    }
    if (sub > e) throw std::logic_error("monomial division: divisor does not divide");
    if (e > sub) out.powers_.emplace_back(v, e - sub);
  }
  if (d != divisor.powers_.end()) throw std::logic_error("monomial division: divisor does not divide");
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

std::string Monomial::str() const {
  if (powers_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : powers_) {
    if (!out.empty()) out += '*';
    out += v.str();
    if (e >= 2) out += '^' + std::to_string(e);
  }
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  auto ia = pa.begin();
  auto ib = pb.begin();
  while (ia != pa.end() && ib != pb.end()) {
    if (ia->first != ib->first) {
      // The smaller variable is present in only one of them.
      return ia->first < ib->first;
    }
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  // Equal degree and one is a prefix of the other implies equality.
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(int c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(const Variable& v) { terms_.emplace(Monomial::of(v), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::vector<Variable> Polynomial::variables() const {
  std::set<Variable> seen;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.powers()) seen.insert(v);
  }
  return {seen.begin(), seen.end()};
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = abs(c);
    if (m.is_one()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += m.str();
    } else {
      out += magnitude.get_str() + '*' + m.str();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Substitution, division, difference quotients

Polynomial substitute(const Polynomial& f, const Substitution& map) {
  if (map.empty()) return f;
  std::map<std::pair<Variable, unsigned>, Polynomial> powers;
  auto power_of = [&](const Variable& v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, map.at(v).pow(e)).first;
    return it->second;
  };

  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Power> kept;
    Polynomial term(1);
    for (const auto& [v, e] : m.powers()) {
      if (map.count(v)) {
        term *= power_of(v, e);
      } else {
        kept.emplace_back(v, e);
      }
    }
    out += term * Polynomial(Monomial(std::move(kept)), c);
  }
  return out;
}

InexactDivision::InexactDivision(Polynomial remainder)
    : Error("inexact division: remainder " + remainder.str()), remainder_(std::move(remainder)) {}

DivisionResult divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lead_m, lead_c] = den.leading_term();
  DivisionResult out;
  Polynomial rest = num;
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading_term();
    if (lead_m.divides(m)) {
      Polynomial t(m / lead_m, c / lead_c);
      rest -= t * den;
      out.quotient += t;
    } else {
      Polynomial t(m, c);
      rest -= t;
      out.remainder += t;
    }
  }
  return out;
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
  auto [q, r] = divide(num, den);
  if (!r.is_zero()) throw InexactDivision(std::move(r));
  return q;
}

Polynomial prime_prefix(const Polynomial& h, std::span<const Variable> vars, std::size_t k) {
  Substitution map;
  for (std::size_t j = 0; j < k && j < vars.size(); ++j) map.emplace(vars[j], vars[j].primed());
  return substitute(h, map);
}

Polynomial diff_quotient(const Polynomial& h, std::span<const Variable> vars, std::size_t i) {
  if (i < 1 || i > vars.size()) {
    throw IndexOutOfRange("difference quotient index " + std::to_string(i) + " outside 1.." +
                          std::to_string(vars.size()));
  }
  const Variable& xi = vars[i - 1];
  Polynomial numerator = prime_prefix(h, vars, i - 1) - prime_prefix(h, vars, i);
  Polynomial denominator = Polynomial(xi) - Polynomial(xi.primed());
  try {
    return divide_exact(numerator, denominator);
  } catch (const InexactDivision& e) {
    throw std::logic_error("difference quotient is not a polynomial (remainder " +
                           e.remainder().str() + ")");
  }
}

Polynomial derivative(const Polynomial& f, const Variable& v) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    out += Polynomial(m / Monomial::of(v), c * e);
  }
  return out;
}

std::vector<Variable> parse_variable_list(std::string_view text) {
  std::vector<Variable> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) out.push_back(Variable::parse(item));
    start = comma + 1;
  }
  return out;
}

}  // namespace lgmf
