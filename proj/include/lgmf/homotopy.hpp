#pragma once

#include <optional>
#include <string>

#include "lgmf/matfac.hpp"

namespace lgmf {

/// Odd map λ: X -> Y with λ0: X⁰ -> Y¹ and λ1: X¹ -> Y⁰.
struct HomotopyWitness {
  PolyMatrix lambda0, lambda1;
  /// Degree bound of the search that produced it, or -1 if supplied by hand.
  int degree = -1;

  /// [[0, λ1], [λ0, 0]] on X⁰ ⊕ X¹.
  PolyMatrix full() const;
};

HomotopyWitness zero_witness(const MatrixFactorization& x, const MatrixFactorization& y);

struct WitnessReport {
  /// Q_Y·λ0 + λ1·P_X - (ψ - φ).β
  PolyMatrix residual_even;
  /// P_Y·λ1 + λ0·Q_X - (ψ - φ).α
  PolyMatrix residual_odd;

  bool ok() const { return is_zero(residual_even) && is_zero(residual_odd); }
  explicit operator bool() const { return ok(); }
  std::string str() const;
};

/// Checks d_Y λ + λ d_X = ψ - φ in both degrees. Throws ShapeMismatch.
WitnessReport check_witness(const MatrixFactorization& x, const MatrixFactorization& y,
                            const Morphism& phi, const Morphism& psi, const HomotopyWitness& w);

struct WitnessSearch {
  enum class Status { found, not_found_within_degree };

  Status status;
  std::optional<HomotopyWitness> witness;
  unsigned max_degree;
  std::size_t unknowns = 0, equations = 0;

  bool found() const { return status == Status::found; }
};

/// Searches for λ whose entries have total degree <= max_degree in the
/// variables of X and Y, by solving the coefficient equations exactly. A
/// returned witness has been re-checked. Failure only means no witness exists
/// within the bound.
WitnessSearch find_witness(const MatrixFactorization& x, const MatrixFactorization& y,
                           const Morphism& phi, const Morphism& psi, unsigned max_degree);

/// find_witness between φ and the zero morphism.
WitnessSearch is_null_homotopic(const MatrixFactorization& x, const MatrixFactorization& y,
                                const Morphism& phi, unsigned max_degree);

}  // namespace lgmf
