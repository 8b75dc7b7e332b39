#include "lgmf/matfac.hpp"

#include <algorithm>
#include <set>

namespace lgmf {

namespace {

std::string shape(const PolyMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_shape(const PolyMatrix& m, Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw ShapeMismatch(std::string(what) + " has shape " + shape(m) + ", expected " +
                        std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void check_product(const PolyMatrix& prod, const Polynomial& f, const char* name) {
  for (Eigen::Index i = 0; i < prod.rows(); ++i) {
    for (Eigen::Index j = 0; j < prod.cols(); ++j) {
      Polynomial expected = i == j ? f : Polynomial();
      if (prod(i, j) != expected) throw NotAFactorization(name, i, j, prod(i, j) - expected);
    }
  }
}

}  // namespace

NotAFactorization::NotAFactorization(std::string product, Eigen::Index row, Eigen::Index col,
                                     Polynomial residual)
    : Error("not a factorization: (" + product + ")[" + std::to_string(row) + "," +
            std::to_string(col) + "] differs from f*I by " + residual.str()),
      product_(std::move(product)),
      row_(row),
      col_(col),
      residual_(std::move(residual)) {}

MatrixFactorization::MatrixFactorization(PolyMatrix p, PolyMatrix q, Polynomial potential,
                                         std::vector<Variable> vars)
    : p_(std::move(p)), q_(std::move(q)), potential_(std::move(potential)) {
  if (p_.rows() != p_.cols()) throw ShapeMismatch("P is not square: " + shape(p_));
  require_shape(q_, p_.rows(), p_.cols(), "Q");

  std::set<Variable> used;
  for (const auto& m : {&p_, &q_}) {
    for (const auto& v : variables(*m)) used.insert(v);
  }
  for (const auto& v : potential_.variables()) used.insert(v);
  if (vars.empty()) {
    vars_.assign(used.begin(), used.end());
  } else {
    std::set<Variable> declared(vars.begin(), vars.end());
    for (const auto& v : used) {
      if (!declared.count(v)) throw UndeclaredVariable(v.str());
    }
    vars_.assign(declared.begin(), declared.end());
  }

  check_product(p_ * q_, potential_, "PQ");
  check_product(q_ * p_, potential_, "QP");
}

PolyMatrix MatrixFactorization::differential() const {
  const Eigen::Index n = size();
  return block2x2<Polynomial>(zeros(n, n), q_, p_, zeros(n, n));
}

std::string MatrixFactorization::str() const {
  std::string vars;
  for (const auto& v : vars_) vars += (vars.empty() ? "" : ",") + v.str();
  return "potential: " + potential_.str() + "\nvars: " + vars + "\nP: " + to_string(p_) +
         "\nQ: " + to_string(q_) + "\n";
}

PolyMatrix grading(Eigen::Index n) {
  return block_diag<Polynomial>(identity(n), scalar_matrix(n, Polynomial(-1)));
}

MatrixFactorization direct_sum(const MatrixFactorization& x, const MatrixFactorization& y) {
  if (x.potential() != y.potential()) {
    throw PotentialMismatch("direct sum of factorizations of " + x.potential().str() + " and " +
                            y.potential().str());
  }
  std::set<Variable> vars(x.vars().begin(), x.vars().end());
  vars.insert(y.vars().begin(), y.vars().end());
  return MatrixFactorization(block_diag(x.p(), y.p()), block_diag(x.q(), y.q()), x.potential(),
                             {vars.begin(), vars.end()});
}

// ---------------------------------------------------------------------------

Morphism::Morphism(MatrixFactorization source, MatrixFactorization target, PolyMatrix alpha,
                   PolyMatrix beta)
    : source_(std::move(source)),
      target_(std::move(target)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
  if (source_.potential() != target_.potential()) {
    throw PotentialMismatch("morphism between factorizations of " + source_.potential().str() +
                            " and " + target_.potential().str());
  }
  require_shape(alpha_, target_.size(), source_.size(), "alpha");
  require_shape(beta_, target_.size(), source_.size(), "beta");
}

PolyMatrix Morphism::full() const { return block_diag(beta_, alpha_); }

Morphism identity_morphism(const MatrixFactorization& x) {
  return Morphism(x, x, identity(x.size()), identity(x.size()));
}

Morphism scalar_morphism(const MatrixFactorization& x, const Polynomial& c) {
  return Morphism(x, x, scalar_matrix(x.size(), c), scalar_matrix(x.size(), c));
}

Morphism zero_morphism(const MatrixFactorization& x, const MatrixFactorization& y) {
  return Morphism(x, y, zeros(y.size(), x.size()), zeros(y.size(), x.size()));
}

std::string MorphismReport::str() const {
  if (ok()) return "ok";
  return "alpha*P_X - P_Y*beta = " + to_string(residual_p) +
         "\nQ_Y*alpha - beta*Q_X = " + to_string(residual_q);
}

MorphismReport validate_morphism(const Morphism& m) {
  const auto& x = m.source();
  const auto& y = m.target();
  return {m.alpha() * x.p() - y.p() * m.beta(), y.q() * m.alpha() - m.beta() * x.q()};
}

Morphism compose_morphisms(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source())) {
    throw ShapeMismatch("composition: target of the first morphism is not the source of the second");
  }
  return Morphism(f.source(), g.target(), g.alpha() * f.alpha(), g.beta() * f.beta());
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.source() == b.source() && a.target() == b.target() && same_matrix(a.alpha(), b.alpha()) &&
         same_matrix(a.beta(), b.beta());
}

std::pair<bool, bool> morphism_equivalence_check(const MatrixFactorization& x,
                                                 const MatrixFactorization& y,
                                                 const PolyMatrix& g0, const PolyMatrix& g1) {
  require_shape(g0, y.size(), x.size(), "G0");
  require_shape(g1, y.size(), x.size(), "G1");
  return {g1 * x.p() == y.p() * g0, g0 * x.q() == y.q() * g1};
}

}  // namespace lgmf
