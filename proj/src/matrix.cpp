#include "lgmf/matrix.hpp"

#include <set>

namespace lgmf {

PolyMatrix substitute(const PolyMatrix& m, const Substitution& map) {
  return m.unaryExpr([&](const Polynomial& p) { return substitute(p, map); });
}

PolyMatrix derivative(const PolyMatrix& m, const Variable& v) {
  return m.unaryExpr([&](const Polynomial& p) { return derivative(p, v); });
}

bool is_zero(const PolyMatrix& m) { return !first_nonzero(m).has_value(); }

std::optional<std::pair<Eigen::Index, Eigen::Index>> first_nonzero(const PolyMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::vector<Variable> variables(const PolyMatrix& m) {
  std::set<Variable> seen;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (auto& v : m(i, j).variables()) seen.insert(v);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string to_string(const PolyMatrix& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).str();
    }
    out += ']';
  }
  return out + ']';
}

}  // namespace lgmf
