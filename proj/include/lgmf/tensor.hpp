#pragma once

#include <map>
#include <string>
#include <string_view>

#include "lgmf/matfac.hpp"

namespace lgmf {

/// The four block layouts of the tensor product of factorizations.
enum class Variant { standard, v1, v2, v3 };

std::string to_string(Variant v);
/// Accepts "standard", "v1", "v2", "v3". Throws std::invalid_argument.
Variant parse_variant(std::string_view text);

/// Tensor product of a factorization of f and one of g over disjoint variable
/// sets, a factorization of f + g of size 2nm. With X = (φ, ψ), Y = (φ', ψ'):
///
///   standard  P = [[φ⊗1, 1⊗φ'], [-1⊗ψ', ψ⊗1]]   Q = [[ψ⊗1, -1⊗φ'], [1⊗ψ', φ⊗1]]
///   v1        P = [[1⊗φ', ψ⊗1], [φ⊗1, -1⊗ψ']]   Q = [[1⊗ψ', ψ⊗1], [φ⊗1, -1⊗φ']]
///   v2        P = [[ψ⊗1, -1⊗ψ'], [1⊗φ', φ⊗1]]   Q = [[φ⊗1, 1⊗ψ'], [-1⊗φ', ψ⊗1]]
///   v3        P = [[-1⊗ψ', φ⊗1], [ψ⊗1, 1⊗φ']]   Q = [[-1⊗φ', φ⊗1], [ψ⊗1, 1⊗ψ']]
///
/// Throws VariableOverlap when the registries intersect.
MatrixFactorization yoshino(const MatrixFactorization& x, const MatrixFactorization& y,
                            Variant variant = Variant::standard);

struct GradedDifferential {
  PolyMatrix d0, d1;
};

/// Differential blocks of X ⊗ Y in graded-module order, built from the
/// component maps d⁰ = φ, d¹ = ψ. Variants are obtained by rotating the
/// 2x2 block grid of D⁰ anticlockwise and of D¹ clockwise, once per variant
/// step. Throws VariableOverlap.
GradedDifferential graded_tensor_differential(const MatrixFactorization& x,
                                              const MatrixFactorization& y,
                                              Variant variant = Variant::standard);

/// a ⊗ b for a: X → X' (potential f) and b: Y → Y' (potential g), as a morphism
/// yoshino(X, Y) → yoshino(X', Y') in the standard layout.
Morphism tensor_morphisms(const Morphism& b, const Morphism& a);

using Renaming = std::map<Variable, Variable>;

/// Injective renaming of registry variables. Throws NonInjectiveRename.
MatrixFactorization rename_vars(const MatrixFactorization& x, const Renaming& map);

/// Entrywise identification of variables; the map need not be injective.
MatrixFactorization identify_vars(const MatrixFactorization& x, const Renaming& map);

}  // namespace lgmf
