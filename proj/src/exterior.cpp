#include "lgmf/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lgmf {

namespace {

void check_index(unsigned i, unsigned n) {
  if (i < 1 || i > n) {
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n));
  }
}

}  // namespace

ThetaWord::ThetaWord(const std::vector<unsigned>& ascending) {
  unsigned last = 0;
  for (unsigned i : ascending) {
    if (i <= last || i > max_generators) {
      throw std::invalid_argument("theta word indices must be strictly ascending in 1..31");
    }
    mask_ |= 1u << (i - 1);
    last = i;
  }
}

unsigned ThetaWord::length() const { return static_cast<unsigned>(std::popcount(mask_)); }

std::vector<unsigned> ThetaWord::indices() const {
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= max_generators; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

unsigned ThetaWord::count_below(unsigned i) const {
  return static_cast<unsigned>(std::popcount(mask_ & ((1u << (i - 1)) - 1u)));
}

std::string ThetaWord::str() const {
  if (empty()) return "1";
  std::string out;
  for (unsigned i : indices()) {
    if (!out.empty()) out += '^';
    out += 't' + std::to_string(i);
  }
  return out;
}

bool operator<(ThetaWord a, ThetaWord b) {
  if (a.length() != b.length()) return a.length() < b.length();
  // Equal length: the word holding the smallest differing index comes first.
  std::uint32_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return false;
  std::uint32_t lowest = diff & (~diff + 1u);
  return (a.mask_ & lowest) != 0;
}

// ---------------------------------------------------------------------------

ExtElement::ExtElement(unsigned n) : n_(n) {
  if (n > ThetaWord::max_generators) throw std::invalid_argument("too many theta generators");
}

ExtElement::ExtElement(unsigned n, ThetaWord w, Polynomial c) : ExtElement(n) {
  if (w.mask() >> n) throw IndexOutOfRange("theta word " + w.str() + " uses a generator above n");
  add(w, c);
}

Polynomial ExtElement::coefficient(ThetaWord w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Polynomial() : it->second;
}

void ExtElement::add(ThetaWord w, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

ExtElement& ExtElement::operator*=(const Polynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

ExtElement ExtElement::even_part() const {
  ExtElement out(n_);
  for (const auto& [w, c] : terms_) {
    if (w.parity() == 0) out.terms_.emplace(w, c);
  }
  return out;
}

ExtElement ExtElement::odd_part() const {
  ExtElement out(n_);
  for (const auto& [w, c] : terms_) {
    if (w.parity() == 1) out.terms_.emplace(w, c);
  }
  return out;
}

std::string ExtElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += '(' + c.str() + ")*" + w.str();
  }
  return out;
}

// ---------------------------------------------------------------------------

ExtElement wedge(unsigned i, const ExtElement& e) {
  check_index(i, e.generators());
  ExtElement out(e.generators());
  for (const auto& [w, c] : e.terms()) {
    if (w.contains(i)) continue;
    out.add(w.with(i), (w.count_below(i) % 2) ? -c : c);
  }
  return out;
}

ExtElement contract(unsigned i, const ExtElement& e) {
  check_index(i, e.generators());
  ExtElement out(e.generators());
  for (const auto& [w, c] : e.terms()) {
    if (!w.contains(i)) continue;
    // Position p = count_below + 1, sign (-1)^(p+1).
    out.add(w.without(i), (w.count_below(i) % 2) ? -c : c);
  }
  return out;
}

KoszulDifferential::KoszulDifferential(Polynomial f, std::vector<Variable> vars)
    : f_(std::move(f)), vars_(std::move(vars)) {
  for (const auto& v : vars_) {
    if (v.prime_level != 0) throw std::invalid_argument("Koszul variables must be unprimed");
  }
  partials_.reserve(vars_.size());
  for (std::size_t i = 1; i <= vars_.size(); ++i) partials_.push_back(diff_quotient(f_, vars_, i));
}

ExtElement KoszulDifferential::a(unsigned i, const ExtElement& e) const {
  const Variable& x = vars_.at(i - 1);
  return (Polynomial(x) - Polynomial(x.primed())) * contract(i, e);
}

ExtElement KoszulDifferential::b(unsigned i, const ExtElement& e) const {
  return partial(i) * wedge(i, e);
}

ExtElement KoszulDifferential::operator()(const ExtElement& e) const {
  ExtElement out(e.generators());
  for (unsigned i = 1; i <= generators(); ++i) {
    out += a(i, e);
    out += b(i, e);
  }
  return out;
}

Polynomial KoszulDifferential::square() const {
  return f_ - prime_prefix(f_, vars_, vars_.size());
}

ExtElement koszul_diff(const Polynomial& f, const std::vector<Variable>& vars, const ExtElement& e) {
  return KoszulDifferential(f, vars)(e);
}

std::vector<ThetaWord> basis_words(unsigned n) {
  if (n > ThetaWord::max_generators) throw std::invalid_argument("too many theta generators");
  std::vector<ThetaWord> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) out.push_back(ThetaWord::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ThetaWord> basis_words(unsigned n, unsigned parity) {
  auto all = basis_words(n);
  std::vector<ThetaWord> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [&](ThetaWord w) { return w.parity() == parity; });
  return out;
}

PolyMatrix operator_matrix(const std::function<ExtElement(const ExtElement&)>& op, unsigned n,
                           const std::vector<ThetaWord>& from, const std::vector<ThetaWord>& to) {
  PolyMatrix out = zeros(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
  for (std::size_t j = 0; j < from.size(); ++j) {
    ExtElement image = op(ExtElement(n, from[j]));
    for (const auto& [w, c] : image.terms()) {
      auto it = std::find(to.begin(), to.end(), w);
      if (it == to.end()) throw std::logic_error("operator image leaves the target basis");
      out(it - to.begin(), static_cast<Eigen::Index>(j)) = c;
    }
  }
  return out;
}

}  // namespace lgmf
