#pragma once

#include <vector>

#include "lgmf/exterior.hpp"
#include "lgmf/matfac.hpp"

namespace lgmf {

/// The Koszul factorization Δ_f of f(x) - f(x') on the exterior algebra.
struct UnitFactorization {
  MatrixFactorization mf;
  /// Ordered unprimed variables x_1..x_n.
  std::vector<Variable> vars;
  std::vector<ThetaWord> basis_even, basis_odd;

  unsigned generators() const { return static_cast<unsigned>(vars.size()); }
  /// Even words followed by odd words.
  std::vector<ThetaWord> basis() const;
};

/// Matrices of the Koszul differential in the (length, lex) word basis.
/// Requires at least one unprimed variable.
UnitFactorization koszul_unit(const Polynomial& f, const std::vector<Variable>& vars);

/// 1 x 2^(n-1) row picking the empty-word coordinate of the even block.
PolyMatrix pi_row(const UnitFactorization& u);

/// Substitution x_i' -> x_i.
Substitution collapse_map(const std::vector<Variable>& vars);

/// Positions of a factorization's even and odd basis inside a larger ambient
/// free module.
struct Layout {
  std::vector<Eigen::Index> even, odd;
  Eigen::Index ambient = 0;
};

/// The factorization's own basis: even 0..n-1, odd n..2n-1.
Layout own_layout(const MatrixFactorization& x);

/// Differential of `x` written on the ambient module of `layout`.
PolyMatrix embed_differential(const MatrixFactorization& x, const Layout& layout);

/// Reads a morphism off an ambient matrix. Throws std::logic_error when the
/// matrix mixes parities.
Morphism morphism_from_full(const MatrixFactorization& source, const Layout& source_layout,
                            const MatrixFactorization& target, const Layout& target_layout,
                            const PolyMatrix& full);

enum class Side { right, left };

/// A unitor with its right inverse.
///
/// Right side: Z = X ⊗ Δ_f glued along the f-variables and collapsed by
/// x' -> x, with ambient basis (a, w) -> a * 2m + w over X⁰⊕X¹ and the full
/// word basis. Left side: Z = Δ_g ⊗ X glued along the g-variables, ambient
/// basis (w, a) -> w * 2r + a.
struct UnitorBundle {
  Side side;
  UnitFactorization unit;
  MatrixFactorization x;
  MatrixFactorization z;
  Layout z_layout;
  /// ρ_X or λ_X: Z -> X.
  Morphism rho;
  /// Right inverse X -> Z.
  Morphism psi;
};

/// ρ_X for X a factorization of g(z) - f(x). `f_vars` lists the variables of
/// the f side in generator order; they must not be primed in X.
/// Throws VariableOverlap if X already uses a primed f-variable.
UnitorBundle unitor_right(const MatrixFactorization& x, const Polynomial& f,
                          const std::vector<Variable>& f_vars);

/// λ_X, the mirror of unitor_right with Δ_g glued on the g side.
UnitorBundle unitor_left(const MatrixFactorization& x, const Polynomial& g,
                         const std::vector<Variable>& g_vars);

/// The plain slice embedding x -> x ⊗ 1. It is a morphism only when every
/// partial derivative of the glued potential vanishes.
Morphism naive_psi(const UnitorBundle& b);

/// Basis vectors of Z (even block first, then odd) that ψ∘ρ sends to 0.
std::vector<Eigen::Index> killed_coordinates(const UnitorBundle& b);

struct NaturalityReport {
  /// Validity of p ⊗ id (or id ⊗ p) as a morphism Z_X -> Z_Y.
  MorphismReport extension;
  /// unitor_Y ∘ (p ⊗ id) - p ∘ unitor_X, split into the odd and even blocks.
  PolyMatrix residual_alpha, residual_beta;

  bool ok() const {
    return extension.ok() && is_zero(residual_alpha) && is_zero(residual_beta);
  }
};

/// Checks the naturality square of the unitor on `side` for p: X -> Y,
/// both factorizations of g - f, with `h` the glued potential (f on the
/// right, g on the left) over `h_vars`.
NaturalityReport naturality_check(const Morphism& p, const Polynomial& h,
                                  const std::vector<Variable>& h_vars, Side side = Side::right);

}  // namespace lgmf
