#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lgmf/matrix.hpp"

namespace lgmf {

/// Fraction-free (Bareiss) row echelon form of an integer matrix, in place.
/// Returns the pivot columns. Every intermediate entry is a minor of the
/// input, so each division by the previous pivot is exact.
inline std::vector<Eigen::Index> bareiss_echelon(Matrix<Integer>& m,
                                                 Eigen::Index pivot_cols = -1) {
  if (pivot_cols < 0) pivot_cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < pivot_cols && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Integer pivot = m(r, c);
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      const Integer lead = m(i, c);
      for (Eigen::Index j = c + 1; j < m.cols(); ++j) {
        Integer t = pivot * m(i, j) - lead * m(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, c) = 0;
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// One exact solution of A x = b, free unknowns pinned to zero; nullopt when
/// the system is inconsistent.
inline std::optional<Vector<Rational>> solve_exact(const RationalMatrix& a,
                                                   const Vector<Rational>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: row count mismatch");
  const Eigen::Index rows = a.rows(), n = a.cols();

  // Clear denominators row by row.
  Matrix<Integer> m(rows, n + 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    Integer l = b(i).get_den();
    for (Eigen::Index j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j <= n; ++j) {
      const Rational& v = j < n ? a(i, j) : b(i);
      m(i, j) = v.get_num() * (l / v.get_den());
    }
  }

  const auto pivots = bareiss_echelon(m, n);
  const auto rank = static_cast<Eigen::Index>(pivots.size());
  for (Eigen::Index i = rank; i < rows; ++i) {
    if (m(i, n) != 0) return std::nullopt;
  }

  Vector<Rational> x = Vector<Rational>::Constant(n, Rational(0));
  for (Eigen::Index k = rank - 1; k >= 0; --k) {
    const Eigen::Index c = pivots[static_cast<std::size_t>(k)];
    Rational acc(m(k, n));
    for (Eigen::Index j = c + 1; j < n; ++j) {
      if (m(k, j) != 0 && x(j) != 0) acc -= Rational(m(k, j)) * x(j);
    }
    x(c) = acc / Rational(m(k, c));
  }
  return x;
}

}  // namespace lgmf
