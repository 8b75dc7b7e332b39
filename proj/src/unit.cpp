#include "lgmf/unit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lgmf/tensor.hpp"

namespace lgmf {

namespace {

// Internal copies of glued variables live at this prime level.
constexpr unsigned glue_level = 2;

void require_generators(const std::vector<Variable>& vars) {
  if (vars.empty()) throw std::invalid_argument("the unit needs at least one variable");
  for (const auto& v : vars) {
    if (v.prime_level != 0) throw std::invalid_argument("unit variable '" + v.str() + "' is primed");
  }
}

void require_free_copies(const MatrixFactorization& x, const std::vector<Variable>& vars) {
  for (const auto& v : vars) {
    for (unsigned level = 1; level <= glue_level; ++level) {
      Variable copy(v.name, level);
      if (std::binary_search(x.vars().begin(), x.vars().end(), copy)) {
        throw VariableOverlap("factorization already uses '" + copy.str() + "'");
      }
    }
  }
}

std::vector<Variable> with_vars(const std::vector<Variable>& a, const std::vector<Variable>& b) {
  std::set<Variable> out(a.begin(), a.end());
  out.insert(b.begin(), b.end());
  return {out.begin(), out.end()};
}

// Glues the external product along `vars` (copy at glue_level -> first
// copy of the unit), then collapses the unit's primed copy, and swaps P and
// Q so that X⁰ ⊗ Δ⁰ sits in the even part.
MatrixFactorization glue_and_collapse(const MatrixFactorization& product,
                                      const std::vector<Variable>& vars, bool glue_to_primed,
                                      const std::vector<Variable>& registry) {
  Renaming glue, collapse;
  for (const auto& v : vars) {
    glue.emplace(Variable(v.name, glue_level), glue_to_primed ? v.primed() : v);
    collapse.emplace(v.primed(), v);
  }
  MatrixFactorization c = identify_vars(identify_vars(product, glue), collapse);
  return MatrixFactorization(c.q(), c.p(), c.potential(), registry);
}

std::vector<PolyMatrix> wedge_matrices(unsigned n, const std::vector<ThetaWord>& basis) {
  std::vector<PolyMatrix> out;
  for (unsigned i = 1; i <= n; ++i) {
    out.push_back(
        operator_matrix([i](const ExtElement& e) { return wedge(i, e); }, n, basis, basis));
  }
  return out;
}

Eigen::Index as_index(std::size_t n) { return static_cast<Eigen::Index>(n); }

}  // namespace

std::vector<ThetaWord> UnitFactorization::basis() const {
  std::vector<ThetaWord> out = basis_even;
  out.insert(out.end(), basis_odd.begin(), basis_odd.end());
  return out;
}

UnitFactorization koszul_unit(const Polynomial& f, const std::vector<Variable>& vars) {
  require_generators(vars);
  for (const auto& v : f.variables()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) throw UndeclaredVariable(v.str());
  }
  const KoszulDifferential d(f, vars);
  const unsigned n = d.generators();
  auto even = basis_words(n, 0);
  auto odd = basis_words(n, 1);
  auto op = [&d](const ExtElement& e) { return d(e); };
  PolyMatrix p = operator_matrix(op, n, even, odd);
  PolyMatrix q = operator_matrix(op, n, odd, even);

  std::vector<Variable> registry = vars;
  for (const auto& v : vars) registry.push_back(v.primed());
  return {MatrixFactorization(std::move(p), std::move(q), d.square(), registry), vars,
          std::move(even), std::move(odd)};
}

PolyMatrix pi_row(const UnitFactorization& u) {
  PolyMatrix row = zeros(1, as_index(u.basis_even.size()));
  row(0, 0) = 1;
  return row;
}

Substitution collapse_map(const std::vector<Variable>& vars) {
  Substitution out;
  for (const auto& v : vars) out.emplace(v.primed(), Polynomial(v));
  return out;
}

Layout own_layout(const MatrixFactorization& x) {
  Layout l;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    l.even.push_back(i);
    l.odd.push_back(x.size() + i);
  }
  l.ambient = 2 * x.size();
  return l;
}

PolyMatrix embed_differential(const MatrixFactorization& x, const Layout& layout) {
  PolyMatrix d = zeros(layout.ambient, layout.ambient);
  d(layout.odd, layout.even) = x.p();
  d(layout.even, layout.odd) = x.q();
  return d;
}

Morphism morphism_from_full(const MatrixFactorization& source, const Layout& source_layout,
                            const MatrixFactorization& target, const Layout& target_layout,
                            const PolyMatrix& full) {
  if (full.rows() != target_layout.ambient || full.cols() != source_layout.ambient) {
    throw ShapeMismatch("ambient matrix does not match the layouts");
  }
  PolyMatrix cross1 = full(target_layout.even, source_layout.odd);
  PolyMatrix cross2 = full(target_layout.odd, source_layout.even);
  if (!is_zero(cross1) || !is_zero(cross2)) {
    throw std::logic_error("ambient matrix does not preserve parity");
  }
  return Morphism(source, target, full(target_layout.odd, source_layout.odd),
                  full(target_layout.even, source_layout.even));
}

// ---------------------------------------------------------------------------

namespace {

struct Ambient {
  PolyMatrix rho, psi, naive;
};

// ρ, ψ and the naive embedding on the ambient module (a, w) -> a * 2m + w.
Ambient right_ambient(const MatrixFactorization& x, const UnitFactorization& u) {
  const Eigen::Index r = x.size(), big_m = 2 * as_index(u.basis_even.size());
  const Eigen::Index n_amb = 2 * r * big_m;
  Ambient out{zeros(2 * r, n_amb), zeros(n_amb, 2 * r), PolyMatrix()};
  for (Eigen::Index a = 0; a < 2 * r; ++a) {
    out.rho(a, a * big_m) = 1;
    out.psi(a * big_m, a) = 1;
  }
  out.naive = out.psi;

  const PolyMatrix dx = x.differential();
  const PolyMatrix gamma = grading(r);
  const auto w = wedge_matrices(u.generators(), u.basis());
  // ψ = (1 + E_1)...(1 + E_n) ι with E_i = γ ∂d_X/∂x_i ⊗ θ_i∧.
  for (unsigned i = u.generators(); i >= 1; --i) {
    PolyMatrix e = kron(PolyMatrix(gamma * derivative(dx, u.vars[i - 1])), w[i - 1]);
    out.psi += e * out.psi;
  }
  return out;
}

// Mirror on (w, a) -> w * 2r + a, with the grading sign of X on the slice.
Ambient left_ambient(const MatrixFactorization& x, const UnitFactorization& u) {
  const Eigen::Index r = x.size(), m = as_index(u.basis_even.size());
  const Eigen::Index n_amb = 2 * m * 2 * r;
  Ambient out{zeros(2 * r, n_amb), zeros(n_amb, 2 * r), PolyMatrix()};
  for (Eigen::Index a = 0; a < 2 * r; ++a) {
    const int sign = a < r ? 1 : -1;
    out.rho(a, a) = sign;
    out.psi(a, a) = sign;
  }
  out.naive = out.psi;

  const PolyMatrix dx = x.differential();
  const PolyMatrix gamma_unit = grading(m);
  const auto w = wedge_matrices(u.generators(), u.basis());
  // ψ = (1 + E_1)...(1 + E_n) ι' with E_i = -(θ_i∧ γ_Δ) ⊗ ∂d_X/∂z_i.
  for (unsigned i = u.generators(); i >= 1; --i) {
    PolyMatrix e = -kron(PolyMatrix(w[i - 1] * gamma_unit), derivative(dx, u.vars[i - 1]));
    out.psi += e * out.psi;
  }
  return out;
}

Layout right_layout(Eigen::Index r, Eigen::Index m) {
  const Eigen::Index big_m = 2 * m;
  Layout l;
  l.ambient = 2 * r * big_m;
  // Even: X¹⊗Δ¹ then X⁰⊗Δ⁰. Odd: X⁰⊗Δ¹ then X¹⊗Δ⁰.
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index s = 0; s < m; ++s) l.even.push_back((r + i) * big_m + m + s);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index s = 0; s < m; ++s) l.even.push_back(i * big_m + s);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index s = 0; s < m; ++s) l.odd.push_back(i * big_m + m + s);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index s = 0; s < m; ++s) l.odd.push_back((r + i) * big_m + s);
  return l;
}

Layout left_layout(Eigen::Index r, Eigen::Index m) {
  const Eigen::Index big_r = 2 * r;
  Layout l;
  l.ambient = 2 * m * big_r;
  // Even: Δ¹⊗X¹ then Δ⁰⊗X⁰. Odd: Δ⁰⊗X¹ then Δ¹⊗X⁰.
  for (Eigen::Index s = 0; s < m; ++s)
    for (Eigen::Index i = 0; i < r; ++i) l.even.push_back((m + s) * big_r + r + i);
  for (Eigen::Index s = 0; s < m; ++s)
    for (Eigen::Index i = 0; i < r; ++i) l.even.push_back(s * big_r + i);
  for (Eigen::Index s = 0; s < m; ++s)
    for (Eigen::Index i = 0; i < r; ++i) l.odd.push_back(s * big_r + r + i);
  for (Eigen::Index s = 0; s < m; ++s)
    for (Eigen::Index i = 0; i < r; ++i) l.odd.push_back((m + s) * big_r + i);
  return l;
}

UnitorBundle make_bundle(Side side, UnitFactorization u, const MatrixFactorization& x,
                         MatrixFactorization z) {
  const Eigen::Index m = as_index(u.basis_even.size());
  Layout layout = side == Side::right ? right_layout(x.size(), m) : left_layout(x.size(), m);
  Ambient amb = side == Side::right ? right_ambient(x, u) : left_ambient(x, u);
  const Layout xl = own_layout(x);
  Morphism rho = morphism_from_full(z, layout, x, xl, amb.rho);
  Morphism psi = morphism_from_full(x, xl, z, layout, amb.psi);
  return {side, std::move(u), x, std::move(z), std::move(layout), std::move(rho), std::move(psi)};
}

}  // namespace

UnitorBundle unitor_right(const MatrixFactorization& x, const Polynomial& f,
                          const std::vector<Variable>& f_vars) {
  require_generators(f_vars);
  require_free_copies(x, f_vars);
  UnitFactorization u = koszul_unit(f, f_vars);

  Renaming tilde;
  for (const auto& v : f_vars) tilde.emplace(v, Variable(v.name, glue_level));
  MatrixFactorization product = yoshino(rename_vars(x, tilde), u.mf);
  MatrixFactorization z =
      glue_and_collapse(product, f_vars, /*glue_to_primed=*/false, with_vars(x.vars(), f_vars));
  return make_bundle(Side::right, std::move(u), x, std::move(z));
}

UnitorBundle unitor_left(const MatrixFactorization& x, const Polynomial& g,
                         const std::vector<Variable>& g_vars) {
  require_generators(g_vars);
  require_free_copies(x, g_vars);
  UnitFactorization u = koszul_unit(g, g_vars);

  Renaming tilde;
  for (const auto& v : g_vars) tilde.emplace(v, Variable(v.name, glue_level));
  MatrixFactorization product = yoshino(u.mf, rename_vars(x, tilde));
  MatrixFactorization z =
      glue_and_collapse(product, g_vars, /*glue_to_primed=*/true, with_vars(x.vars(), g_vars));
  return make_bundle(Side::left, std::move(u), x, std::move(z));
}

Morphism naive_psi(const UnitorBundle& b) {
  Ambient amb = b.side == Side::right ? right_ambient(b.x, b.unit) : left_ambient(b.x, b.unit);
  return morphism_from_full(b.x, own_layout(b.x), b.z, b.z_layout, amb.naive);
}

std::vector<Eigen::Index> killed_coordinates(const UnitorBundle& b) {
  const PolyMatrix full = compose_morphisms(b.psi, b.rho).full();
  std::vector<Eigen::Index> out;
  for (Eigen::Index j = 0; j < full.cols(); ++j) {
    if (is_zero(full.col(j))) out.push_back(j);
  }
  return out;
}

NaturalityReport naturality_check(const Morphism& p, const Polynomial& h,
                                  const std::vector<Variable>& h_vars, Side side) {
  auto build = [&](const MatrixFactorization& x) {
    return side == Side::right ? unitor_right(x, h, h_vars) : unitor_left(x, h, h_vars);
  };
  const UnitorBundle bx = build(p.source());
  const UnitorBundle by = build(p.target());

  const Eigen::Index words = 2 * as_index(bx.unit.basis_even.size());
  const PolyMatrix ext_full = side == Side::right ? kron(p.full(), identity(words))
                                                  : kron(identity(words), p.full());
  const Morphism ext = morphism_from_full(bx.z, bx.z_layout, by.z, by.z_layout, ext_full);

  NaturalityReport report{validate_morphism(ext), PolyMatrix(), PolyMatrix()};
  const Morphism lhs = compose_morphisms(by.rho, ext);
  const Morphism rhs = compose_morphisms(p, bx.rho);
  report.residual_alpha = lhs.alpha() - rhs.alpha();
  report.residual_beta = lhs.beta() - rhs.beta();
  return report;
}

}  // namespace lgmf
