#include "lgmf/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lgmf {

namespace {

void require_disjoint(const MatrixFactorization& x, const MatrixFactorization& y) {
  std::vector<Variable> common;
  std::set_intersection(x.vars().begin(), x.vars().end(), y.vars().begin(), y.vars().end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    throw VariableOverlap("tensor factors share variable '" + common.front().str() +
                          "'; rename one side first");
  }
}

std::vector<Variable> merged_vars(const MatrixFactorization& x, const MatrixFactorization& y) {
  std::set<Variable> out(x.vars().begin(), x.vars().end());
  out.insert(y.vars().begin(), y.vars().end());
  return {out.begin(), out.end()};
}

// Kronecker blocks A⊗1_m and 1_n⊗B.
struct Blocks {
  PolyMatrix phi1, psi1, one_phi, one_psi;

  Blocks(const MatrixFactorization& x, const MatrixFactorization& y)
      : phi1(kron(x.p(), identity(y.size()))),
        psi1(kron(x.q(), identity(y.size()))),
        one_phi(kron(identity(x.size()), y.p())),
        one_psi(kron(identity(x.size()), y.q())) {}
};

// [[A,B],[C,D]] -> [[B,D],[A,C]]
PolyMatrix rotate_anticlockwise(const PolyMatrix& m) {
  const Eigen::Index h = m.rows() / 2, w = m.cols() / 2;
  return block2x2<Polynomial>(m.topRightCorner(h, w), m.bottomRightCorner(h, w),
                              m.topLeftCorner(h, w), m.bottomLeftCorner(h, w));
}

// [[A,B],[C,D]] -> [[C,A],[D,B]]
PolyMatrix rotate_clockwise(const PolyMatrix& m) {
  const Eigen::Index h = m.rows() / 2, w = m.cols() / 2;
  return block2x2<Polynomial>(m.bottomLeftCorner(h, w), m.topLeftCorner(h, w),
                              m.bottomRightCorner(h, w), m.topRightCorner(h, w));
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::standard: return "standard";
    case Variant::v1: return "v1";
    case Variant::v2: return "v2";
    case Variant::v3: return "v3";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  if (text == "standard") return Variant::standard;
  if (text == "v1") return Variant::v1;
  if (text == "v2") return Variant::v2;
  if (text == "v3") return Variant::v3;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

MatrixFactorization yoshino(const MatrixFactorization& x, const MatrixFactorization& y,
                            Variant variant) {
  require_disjoint(x, y);
  const Blocks k(x, y);
  PolyMatrix p, q;
  switch (variant) {
    case Variant::standard:
      p = block2x2<Polynomial>(k.phi1, k.one_phi, -k.one_psi, k.psi1);
      q = block2x2<Polynomial>(k.psi1, -k.one_phi, k.one_psi, k.phi1);
      break;
    case Variant::v1:
      p = block2x2<Polynomial>(k.one_phi, k.psi1, k.phi1, -k.one_psi);
      q = block2x2<Polynomial>(k.one_psi, k.psi1, k.phi1, -k.one_phi);
      break;
    case Variant::v2:
      p = block2x2<Polynomial>(k.psi1, -k.one_psi, k.one_phi, k.phi1);
      q = block2x2<Polynomial>(k.phi1, k.one_psi, -k.one_phi, k.psi1);
      break;
    case Variant::v3:
      p = block2x2<Polynomial>(-k.one_psi, k.phi1, k.psi1, k.one_phi);
      q = block2x2<Polynomial>(-k.one_phi, k.phi1, k.psi1, k.one_psi);
      break;
  }
  return MatrixFactorization(std::move(p), std::move(q), x.potential() + y.potential(),
                             merged_vars(x, y));
}

GradedDifferential graded_tensor_differential(const MatrixFactorization& x,
                                              const MatrixFactorization& y, Variant variant) {
  require_disjoint(x, y);
  const auto n = x.size(), m = y.size();
  const PolyMatrix& d0x = x.p();
  const PolyMatrix& d1x = x.q();
  const PolyMatrix& d0y = y.p();
  const PolyMatrix& d1y = y.q();
  const PolyMatrix in = identity(n), im = identity(m);

  GradedDifferential out{
      block2x2<Polynomial>(kron(d0x, im), kron(in, d0y), -kron(in, d1y), kron(d1x, im)),
      block2x2<Polynomial>(kron(d1x, im), -kron(in, d0y), kron(in, d1y), kron(d0x, im))};
  for (int k = 0; k < static_cast<int>(variant); ++k) {
    out.d0 = rotate_anticlockwise(out.d0);
    out.d1 = rotate_clockwise(out.d1);
  }
  return out;
}

Morphism tensor_morphisms(const Morphism& b, const Morphism& a) {
  MatrixFactorization source = yoshino(a.source(), b.source());
  MatrixFactorization target = yoshino(a.target(), b.target());
  // Even part X⁰⊗Y¹ ⊕ X¹⊗Y⁰, odd part X¹⊗Y¹ ⊕ X⁰⊗Y⁰.
  PolyMatrix beta = block_diag(kron(a.beta(), b.alpha()), kron(a.alpha(), b.beta()));
  PolyMatrix alpha = block_diag(kron(a.alpha(), b.alpha()), kron(a.beta(), b.beta()));
  return Morphism(std::move(source), std::move(target), std::move(alpha), std::move(beta));
}

MatrixFactorization rename_vars(const MatrixFactorization& x, const Renaming& map) {
  std::set<Variable> image;
  for (const auto& v : x.vars()) {
    auto it = map.find(v);
    const Variable& w = it == map.end() ? v : it->second;
    if (!image.insert(w).second) {
      throw NonInjectiveRename("renaming sends two registry variables to '" + w.str() + "'");
    }
  }
  return identify_vars(x, map);
}

MatrixFactorization identify_vars(const MatrixFactorization& x, const Renaming& map) {
  Substitution sub;
  for (const auto& [from, to] : map) sub.emplace(from, Polynomial(to));
  std::set<Variable> vars;
  for (const auto& v : x.vars()) {
    auto it = map.find(v);
    vars.insert(it == map.end() ? v : it->second);
  }
  return MatrixFactorization(substitute(x.p(), sub), substitute(x.q(), sub),
                             substitute(x.potential(), sub), {vars.begin(), vars.end()});
}

}  // namespace lgmf
