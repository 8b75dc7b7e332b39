#include "lgmf/homotopy.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "lgmf/linsolve.hpp"

namespace lgmf {

namespace {

void require_endpoints(const MatrixFactorization& x, const MatrixFactorization& y,
                       const Morphism& m, const char* name) {
  if (!(m.source() == x) || !(m.target() == y)) {
    throw ShapeMismatch(std::string(name) + " does not run between the given factorizations");
  }
}

// All monomials of total degree <= d, in increasing degree.
std::vector<Monomial> monomials_up_to(const std::vector<Variable>& vars, unsigned d) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  std::vector<std::size_t> first_var{0};
  for (unsigned k = 1; k <= d; ++k) {
    std::vector<Monomial> next;
    std::vector<std::size_t> next_first;
    for (std::size_t t = 0; t < layer.size(); ++t) {
      // Multiply only by variables at or after the last one used, so every
      // monomial is produced once.
      for (std::size_t v = first_var[t]; v < vars.size(); ++v) {
        next.push_back(layer[t] * Monomial::of(vars[v]));
        next_first.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
    first_var = std::move(next_first);
  }
  return out;
}

// Equation key: (block, row, col, monomial); block 0 is even, 1 is odd.
using Key = std::tuple<int, Eigen::Index, Eigen::Index, Monomial>;

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
    return GrlexGreater()(std::get<3>(a), std::get<3>(b));
  }
};

using Column = std::map<Key, Rational, KeyLess>;

void accumulate(Column& col, int block, Eigen::Index r, Eigen::Index c, const Polynomial& p) {
  for (const auto& [m, coeff] : p.terms()) {
    Rational& slot = col[Key{block, r, c, m}];
    slot += coeff;
  }
}

}  // namespace

PolyMatrix HomotopyWitness::full() const {
  const Eigen::Index ry = lambda0.rows(), rx = lambda0.cols();
  return block2x2<Polynomial>(zeros(ry, rx), lambda1, lambda0, zeros(ry, rx));
}

HomotopyWitness zero_witness(const MatrixFactorization& x, const MatrixFactorization& y) {
  return {zeros(y.size(), x.size()), zeros(y.size(), x.size()), 0};
}

std::string WitnessReport::str() const {
  if (ok()) return "ok";
  return "even residual " + to_string(residual_even) + "\nodd residual " + to_string(residual_odd);
}

WitnessReport check_witness(const MatrixFactorization& x, const MatrixFactorization& y,
                            const Morphism& phi, const Morphism& psi, const HomotopyWitness& w) {
  require_endpoints(x, y, phi, "phi");
  require_endpoints(x, y, psi, "psi");
  for (const auto* l : {&w.lambda0, &w.lambda1}) {
    if (l->rows() != y.size() || l->cols() != x.size()) {
      throw ShapeMismatch("witness blocks must be " + std::to_string(y.size()) + "x" +
                          std::to_string(x.size()));
    }
  }
  return {y.q() * w.lambda0 + w.lambda1 * x.p() - (psi.beta() - phi.beta()),
          y.p() * w.lambda1 + w.lambda0 * x.q() - (psi.alpha() - phi.alpha())};
}

WitnessSearch find_witness(const MatrixFactorization& x, const MatrixFactorization& y,
                           const Morphism& phi, const Morphism& psi, unsigned max_degree) {
  require_endpoints(x, y, phi, "phi");
  require_endpoints(x, y, psi, "psi");

  std::set<Variable> var_set(x.vars().begin(), x.vars().end());
  var_set.insert(y.vars().begin(), y.vars().end());
  const std::vector<Variable> vars(var_set.begin(), var_set.end());
  const auto monos = monomials_up_to(vars, max_degree);

  const Eigen::Index ry = y.size(), rx = x.size();
  const auto n_mono = static_cast<Eigen::Index>(monos.size());
  const Eigen::Index per_block = ry * rx * n_mono;
  auto unknown = [&](int block, Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return block * per_block + (i * rx + j) * n_mono + k;
  };

  // Image of each unknown coefficient under λ -> d_Y λ + λ d_X.
  std::vector<Column> columns(static_cast<std::size_t>(2 * per_block));
  for (Eigen::Index i = 0; i < ry; ++i) {
    for (Eigen::Index j = 0; j < rx; ++j) {
      for (Eigen::Index k = 0; k < n_mono; ++k) {
        const Polynomial mu(monos[static_cast<std::size_t>(k)], Rational(1));
        // λ0(i,j) = μ: even gets Q_Y(:,i) μ in column j; odd gets μ Q_X(j,:) in row i.
        Column& c0 = columns[static_cast<std::size_t>(unknown(0, i, j, k))];
        for (Eigen::Index a = 0; a < ry; ++a) accumulate(c0, 0, a, j, y.q()(a, i) * mu);
        for (Eigen::Index b = 0; b < rx; ++b) accumulate(c0, 1, i, b, mu * x.q()(j, b));
        // λ1(i,j) = μ: even gets μ P_X(j,:) in row i; odd gets P_Y(:,i) μ in column j.
        Column& c1 = columns[static_cast<std::size_t>(unknown(1, i, j, k))];
        for (Eigen::Index b = 0; b < rx; ++b) accumulate(c1, 0, i, b, mu * x.p()(j, b));
        for (Eigen::Index a = 0; a < ry; ++a) accumulate(c1, 1, a, j, y.p()(a, i) * mu);
      }
    }
  }

  Column rhs;
  const PolyMatrix diff_beta = psi.beta() - phi.beta();
  const PolyMatrix diff_alpha = psi.alpha() - phi.alpha();
  for (Eigen::Index a = 0; a < ry; ++a) {
    for (Eigen::Index b = 0; b < rx; ++b) {
      accumulate(rhs, 0, a, b, diff_beta(a, b));
      accumulate(rhs, 1, a, b, diff_alpha(a, b));
    }
  }

  std::map<Key, Eigen::Index, KeyLess> rows;
  auto row_of = [&](const Key& key) {
    auto [it, inserted] = rows.try_emplace(key, static_cast<Eigen::Index>(rows.size()));
    return it->second;
  };
  for (const auto& col : columns)
    for (const auto& [key, v] : col)
      if (v != 0) row_of(key);
  for (const auto& [key, v] : rhs)
    if (v != 0) row_of(key);

  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index n_cols = 2 * per_block;
  RationalMatrix a = RationalMatrix::Constant(n_rows, n_cols, Rational(0));
  Vector<Rational> b = Vector<Rational>::Constant(n_rows, Rational(0));
  for (Eigen::Index j = 0; j < n_cols; ++j) {
    for (const auto& [key, v] : columns[static_cast<std::size_t>(j)]) {
      if (v != 0) a(rows.at(key), j) = v;
    }
  }
  for (const auto& [key, v] : rhs) {
    if (v != 0) b(rows.at(key)) = v;
  }

  WitnessSearch result{WitnessSearch::Status::not_found_within_degree, std::nullopt, max_degree,
                       static_cast<std::size_t>(n_cols), static_cast<std::size_t>(n_rows)};
  auto solution = solve_exact(a, b);
  if (!solution) return result;

  HomotopyWitness w = zero_witness(x, y);
  w.degree = static_cast<int>(max_degree);
  for (int block = 0; block < 2; ++block) {
    PolyMatrix& lambda = block == 0 ? w.lambda0 : w.lambda1;
    for (Eigen::Index i = 0; i < ry; ++i) {
      for (Eigen::Index j = 0; j < rx; ++j) {
        for (Eigen::Index k = 0; k < n_mono; ++k) {
          const Rational& c = (*solution)(unknown(block, i, j, k));
          if (c != 0) lambda(i, j) += Polynomial(monos[static_cast<std::size_t>(k)], c);
        }
      }
    }
  }
  if (!check_witness(x, y, phi, psi, w).ok()) {
    throw std::logic_error("solved homotopy witness fails its own check");
  }
  result.status = WitnessSearch::Status::found;
  result.witness = std::move(w);
  return result;
}

WitnessSearch is_null_homotopic(const MatrixFactorization& x, const MatrixFactorization& y,
                                const Morphism& phi, unsigned max_degree) {
  return find_witness(x, y, phi, zero_morphism(x, y), max_degree);
}

}  // namespace lgmf
