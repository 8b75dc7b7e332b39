#pragma once

#include <optional>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "lgmf/polynomial.hpp"
#include "lgmf/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<lgmf::Polynomial> : GenericNumTraits<lgmf::Polynomial> {
  using Real = lgmf::Polynomial;
  using NonInteger = lgmf::Polynomial;
  using Literal = lgmf::Polynomial;
  using Nested = lgmf::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lgmf {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using PolyMatrix = Matrix<Polynomial>;
using RationalMatrix = Matrix<Rational>;

/// Kronecker product with (A⊗B)(i*m + r, j*m + s) = A(i,j) * B(r,s), m = B.rows().
template <class DerivedA, class DerivedB>
Matrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index br = b.rows(), bc = b.cols();
  Matrix<Scalar> out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index r = 0; r < br; ++r) {
        for (Eigen::Index s = 0; s < bc; ++s) out(i * br + r, j * bc + s) = a(i, j) * b(r, s);
      }
    }
  }
  return out;
}

template <class Scalar = Polynomial>
Matrix<Scalar> identity(Eigen::Index n) {
  Matrix<Scalar> out = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = Scalar(1);
  return out;
}

template <class Scalar = Polynomial>
Matrix<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

/// c * I_n.
inline PolyMatrix scalar_matrix(Eigen::Index n, const Polynomial& c) {
  PolyMatrix out = zeros(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = c;
  return out;
}

/// [[a, b], [c, d]] for equally shaped blocks.
template <class Scalar>
Matrix<Scalar> block2x2(const Matrix<Scalar>& a, const Matrix<Scalar>& b, const Matrix<Scalar>& c,
                        const Matrix<Scalar>& d) {
  Matrix<Scalar> out(a.rows() + c.rows(), a.cols() + b.cols());
  out << a, b, c, d;
  return out;
}

template <class Scalar>
Matrix<Scalar> block_diag(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return block2x2<Scalar>(a, zeros<Scalar>(a.rows(), b.cols()), zeros<Scalar>(b.rows(), a.cols()),
                          b);
}

/// Entrywise polynomial substitution.
PolyMatrix substitute(const PolyMatrix& m, const Substitution& map);

/// Entrywise formal derivative.
PolyMatrix derivative(const PolyMatrix& m, const Variable& v);

bool is_zero(const PolyMatrix& m);

/// Entrywise equality that is false, not undefined, on a shape mismatch.
template <class Scalar>
bool same_matrix(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

/// First nonzero entry in row-major order.
std::optional<std::pair<Eigen::Index, Eigen::Index>> first_nonzero(const PolyMatrix& m);

/// Sorted union of the variables of all entries.
std::vector<Variable> variables(const PolyMatrix& m);

/// `[[a, b], [c, d]]` rendering with canonical entries.
std::string to_string(const PolyMatrix& m);

}  // namespace lgmf
