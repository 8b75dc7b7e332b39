#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lgmf/matrix.hpp"
#include "lgmf/polynomial.hpp"

namespace lgmf {

/// Ascending product θ_{i1}...θ_{ik}, stored as a bit mask (bit i-1 for θ_i).
class ThetaWord {
 public:
  static constexpr unsigned max_generators = 31;

  ThetaWord() = default;
  /// Indices must be strictly ascending and in 1..max_generators.
  explicit ThetaWord(const std::vector<unsigned>& ascending);
  static ThetaWord from_mask(std::uint32_t mask) { return ThetaWord(Mask{}, mask); }

  std::uint32_t mask() const { return mask_; }
  bool contains(unsigned i) const { return (mask_ >> (i - 1)) & 1u; }
  unsigned length() const;
  /// Z/2 degree.
  unsigned parity() const { return length() & 1u; }
  bool empty() const { return mask_ == 0; }
  std::vector<unsigned> indices() const;
  /// Number of generators in the word with index below i.
  unsigned count_below(unsigned i) const;

  ThetaWord with(unsigned i) const { return from_mask(mask_ | (1u << (i - 1))); }
  ThetaWord without(unsigned i) const { return from_mask(mask_ & ~(1u << (i - 1))); }

  std::string str() const;

  friend bool operator==(ThetaWord a, ThetaWord b) { return a.mask_ == b.mask_; }
  /// Basis order: length first, then lexicographic on the index lists.
  friend bool operator<(ThetaWord a, ThetaWord b);

 private:
  struct Mask {};
  ThetaWord(Mask, std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// Element of the exterior algebra on θ_1..θ_n with polynomial coefficients.
class ExtElement {
 public:
  using TermMap = std::map<ThetaWord, Polynomial>;

  explicit ExtElement(unsigned n);
  ExtElement(unsigned n, ThetaWord w, Polynomial c = Polynomial(1));

  unsigned generators() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(ThetaWord w) const;

  void add(ThetaWord w, const Polynomial& c);
  ExtElement& operator+=(const ExtElement& other);
  ExtElement& operator-=(const ExtElement& other);
  ExtElement& operator*=(const Polynomial& c);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const Polynomial& c, ExtElement a) { return a *= c; }
  friend bool operator==(const ExtElement&, const ExtElement&) = default;

  ExtElement even_part() const;
  ExtElement odd_part() const;

  /// Debug rendering such as `(x - x')*1 + 2*t1^t3`.
  std::string str() const;

 private:
  unsigned n_;
  TermMap terms_;
};

/// θ_i ∧ e. Throws IndexOutOfRange unless 1 <= i <= n.
ExtElement wedge(unsigned i, const ExtElement& e);

/// The contraction θ_i*, sign (-1)^(p+1) at 1-based position p.
ExtElement contract(unsigned i, const ExtElement& e);

/// Σ_i (x_i - x_i') θ_i* + ∂_i(f) θ_i∧ over the ordered unprimed variables.
class KoszulDifferential {
 public:
  KoszulDifferential(Polynomial f, std::vector<Variable> vars);

  const Polynomial& potential() const { return f_; }
  const std::vector<Variable>& vars() const { return vars_; }
  unsigned generators() const { return static_cast<unsigned>(vars_.size()); }
  /// ∂_i(f), 1-based.
  const Polynomial& partial(unsigned i) const { return partials_.at(i - 1); }

  /// A_i = (x_i - x_i') θ_i*.
  ExtElement a(unsigned i, const ExtElement& e) const;
  /// B_i = ∂_i(f) θ_i∧.
  ExtElement b(unsigned i, const ExtElement& e) const;
  ExtElement operator()(const ExtElement& e) const;

  /// f(x) - f(x').
  Polynomial square() const;

 private:
  Polynomial f_;
  std::vector<Variable> vars_;
  std::vector<Polynomial> partials_;
};

ExtElement koszul_diff(const Polynomial& f, const std::vector<Variable>& vars, const ExtElement& e);

/// All 2^n words in basis order.
std::vector<ThetaWord> basis_words(unsigned n);
/// Words of even (parity 0) or odd (parity 1) length, in basis order.
std::vector<ThetaWord> basis_words(unsigned n, unsigned parity);

/// Matrix of a linear operator: column j holds the coordinates of op(from[j])
/// in the basis `to`. Throws std::logic_error if the image leaves span(to).
PolyMatrix operator_matrix(const std::function<ExtElement(const ExtElement&)>& op, unsigned n,
                           const std::vector<ThetaWord>& from, const std::vector<ThetaWord>& to);

}  // namespace lgmf
