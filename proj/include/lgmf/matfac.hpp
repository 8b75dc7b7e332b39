#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lgmf/errors.hpp"
#include "lgmf/matrix.hpp"
#include "lgmf/polynomial.hpp"

namespace lgmf {

/// Raised when P·Q or Q·P differs from potential·I.
class NotAFactorization : public Error {
 public:
  NotAFactorization(std::string product, Eigen::Index row, Eigen::Index col, Polynomial residual);

  /// "PQ" or "QP".
  const std::string& product() const noexcept { return product_; }
  Eigen::Index row() const noexcept { return row_; }
  Eigen::Index col() const noexcept { return col_; }
  const Polynomial& residual() const noexcept { return residual_; }

 private:
  std::string product_;
  Eigen::Index row_, col_;
  Polynomial residual_;
};

/// A pair of square matrices with P·Q = Q·P = f·I, validated on construction.
///
/// P maps the even module X⁰ to the odd module X¹ and Q maps back. The
/// registry lists the variables entries may use; when omitted it is the set
/// of variables occurring in P, Q and f.
class MatrixFactorization {
 public:
  MatrixFactorization(PolyMatrix p, PolyMatrix q, Polynomial potential,
                      std::vector<Variable> vars = {});

  const PolyMatrix& p() const { return p_; }
  const PolyMatrix& q() const { return q_; }
  const Polynomial& potential() const { return potential_; }
  const std::vector<Variable>& vars() const { return vars_; }
  Eigen::Index size() const { return p_.rows(); }

  /// The odd endomorphism [[0, Q], [P, 0]] of X⁰ ⊕ X¹.
  PolyMatrix differential() const;

  std::string str() const;

  friend bool operator==(const MatrixFactorization& a, const MatrixFactorization& b) {
    return a.potential_ == b.potential_ && same_matrix(a.p_, b.p_) && same_matrix(a.q_, b.q_);
  }

 private:
  PolyMatrix p_, q_;
  Polynomial potential_;
  std::vector<Variable> vars_;
};

/// The grading involution diag(I_n, -I_n) on X⁰ ⊕ X¹.
PolyMatrix grading(Eigen::Index n);

/// Block-diagonal sum. Throws PotentialMismatch.
MatrixFactorization direct_sum(const MatrixFactorization& x, const MatrixFactorization& y);

/// Even map between factorizations of one potential.
///
/// `beta` acts on the even modules (X⁰ → Y⁰) and `alpha` on the odd modules
/// (X¹ → Y¹); the defining squares are α·P_X = P_Y·β and Q_Y·α = β·Q_X.
/// Construction checks shapes and potentials only, so invalid pairs can be
/// represented and diagnosed with validate_morphism.
class Morphism {
 public:
  Morphism(MatrixFactorization source, MatrixFactorization target, PolyMatrix alpha,
           PolyMatrix beta);

  const MatrixFactorization& source() const { return source_; }
  const MatrixFactorization& target() const { return target_; }
  const PolyMatrix& alpha() const { return alpha_; }
  const PolyMatrix& beta() const { return beta_; }

  /// blockdiag(β, α) acting on X⁰ ⊕ X¹.
  PolyMatrix full() const;

 private:
  MatrixFactorization source_, target_;
  PolyMatrix alpha_, beta_;
};

Morphism identity_morphism(const MatrixFactorization& x);
Morphism scalar_morphism(const MatrixFactorization& x, const Polynomial& c);
Morphism zero_morphism(const MatrixFactorization& x, const MatrixFactorization& y);

struct MorphismReport {
  /// α·P_X − P_Y·β.
  PolyMatrix residual_p;
  /// Q_Y·α − β·Q_X.
  PolyMatrix residual_q;

  bool ok() const { return is_zero(residual_p) && is_zero(residual_q); }
  explicit operator bool() const { return ok(); }
  std::string str() const;
};

MorphismReport validate_morphism(const Morphism& m);

/// g ∘ f. Throws ShapeMismatch when f.target differs from g.source.
Morphism compose_morphisms(const Morphism& g, const Morphism& f);

/// Entrywise equality of two morphisms with the same endpoints.
bool operator==(const Morphism& a, const Morphism& b);

/// Evaluates G₁·P_X == P_Y·G₀ and G₀·Q_X == Q_Y·G₁ independently, with
/// G₀ on the even modules and G₁ on the odd ones.
std::pair<bool, bool> morphism_equivalence_check(const MatrixFactorization& x,
                                                 const MatrixFactorization& y,
                                                 const PolyMatrix& g0, const PolyMatrix& g1);

}  // namespace lgmf
