#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace lgmf;
using namespace lgmf::testing;

namespace {

const Variable vx("x"), vy("y"), vz("z"), vw("w");
const Polynomial x(vx), y(vy), z(vz), w(vw), xp(vx.primed()), yp(vy.primed());

MatrixFactorization mf1(Polynomial p, Polynomial q) {
  return MatrixFactorization(mat({{p}}), mat({{q}}), p * q);
}

// ([[z, x], [x, z]], [[z, -x], [-x, z]]), a factorization of z^2 - x^2.
MatrixFactorization two_by_two() {
  return MatrixFactorization(mat({{z, x}, {x, z}}), mat({{z, -x}, {-x, z}}), z * z - x * x);
}

struct Fixture {
  MatrixFactorization x;
  Polynomial f, g;
  std::vector<Variable> f_vars, g_vars;
};

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  out.push_back({mf1(1, z - x), x, z, {vx}, {vz}});
  out.push_back({two_by_two(), x * x, z * z, {vx}, {vz}});
  // Two variables on each side: z*w - x*y.
  out.push_back({yoshino(mf1(z, w), mf1(x, -y)), x * y, z * w, {vx, vy}, {vz, vw}});
  // Nonlinear on both sides: z^2 - x^2 y^2.
  out.push_back({mf1(z - x * y, z + x * y), x * x * y * y, z * z, {vx, vy}, {vz}});
  return out;
}

// Ambient differential of the collapsed product, by the graded tensor formula.
PolyMatrix ambient_differential(const UnitorBundle& b) {
  const PolyMatrix d_unit = substitute(b.unit.mf.differential(), collapse_map(b.unit.vars));
  const Eigen::Index words = d_unit.rows();
  const PolyMatrix dx = b.x.differential();
  if (b.side == Side::right) {
    return kron_reference(dx, identity<Polynomial>(words)) - kron_reference(grading(b.x.size()), d_unit);
  }
  return kron_reference(d_unit, identity<Polynomial>(dx.rows())) -
         kron_reference(grading(words / 2), dx);
}

}  // namespace

TEST_CASE("koszul_unit examples") {
  auto u = koszul_unit(x, {vx});
  CHECK(u.mf.p() == mat({{1}}));
  CHECK(u.mf.q() == mat({{x - xp}}));
  CHECK(u.mf.potential() == x - xp);

  auto u3 = koszul_unit(x.pow(3), {vx});
  CHECK(u3.mf.p() == mat({{x * x + x * xp + xp * xp}}));
  CHECK(u3.mf.q() == mat({{x - xp}}));

  auto u2 = koszul_unit(x - y, {vx, vy});
  CHECK(u2.basis_even == std::vector<ThetaWord>{ThetaWord(), ThetaWord({1, 2})});
  CHECK(u2.basis_odd == std::vector<ThetaWord>{ThetaWord({1}), ThetaWord({2})});
  // Columns: d(1) = θ1 - θ2, d(θ1θ2) = -(y - y')θ1 + (x - x')θ2.
  CHECK(u2.mf.p() == mat({{1, -(y - yp)}, {-1, x - xp}}));
  CHECK(u2.mf.q() == mat({{x - xp, y - yp}, {1, 1}}));
  CHECK(u2.mf.potential() == (x - y) - (xp - yp));

  CHECK_THROWS_AS(koszul_unit(x, {}), std::invalid_argument);
  CHECK_THROWS_AS(koszul_unit(x + y, {vx}), UndeclaredVariable);
}

TEST_CASE("unit ranks, parity and validation") {
  const std::vector<std::pair<Polynomial, std::vector<Variable>>> cases{
      {x.pow(3), {vx}},
      {x - y, {vx, vy}},
      {x * x + y * y, {vx, vy}},
      {x * x * y + z.pow(3), {vx, vy, vz}},
  };
  for (const auto& [f, vars] : cases) {
    CAPTURE(f.str());
    auto u = koszul_unit(f, vars);
    const auto half = Eigen::Index{1} << (vars.size() - 1);
    CHECK(u.mf.size() == half);
    CHECK(u.basis_even.size() == static_cast<std::size_t>(half));
    CHECK(u.mf.potential() == f - substitute(f, [&] {
            Substitution s;
            for (const auto& v : vars) s.emplace(v, v.primed());
            return s;
          }()));
    for (auto word : u.basis_even) CHECK(word.parity() == 0);
    for (auto word : u.basis_odd) CHECK(word.parity() == 1);
  }
}

TEST_CASE("pi row") {
  CHECK(pi_row(koszul_unit(x, {vx})) == mat({{1}}));
  CHECK(pi_row(koszul_unit(x - y, {vx, vy})) == mat({{1, 0}}));
  const std::vector<std::pair<Polynomial, std::vector<Variable>>> cases{
      {x.pow(3), {vx}},
      {x - y, {vx, vy}},
      {x * x + y * y, {vx, vy}},
      {x * x * y + z.pow(3), {vx, vy, vz}},
  };
  for (const auto& [f, vars] : cases) {
    auto u = koszul_unit(f, vars);
    CHECK(is_zero(substitute(PolyMatrix(pi_row(u) * u.mf.q()), collapse_map(vars))));
  }
}

TEST_CASE("unitor examples on ([1], [z - x])") {
  MatrixFactorization xz = mf1(1, z - x);
  UnitorBundle b = unitor_right(xz, x, {vx});
  CHECK(b.z.size() == 2);
  CHECK(b.z.potential() == z - x);
  CHECK(compose_morphisms(b.rho, b.psi) == identity_morphism(xz));
  CHECK_FALSE(compose_morphisms(b.psi, b.rho) == identity_morphism(b.z));
  CHECK(killed_coordinates(b).size() == 2);
  // Images of the generators of X⁰ and X¹ in Z's even and odd bases.
  CHECK(b.psi.beta() == mat({{0}, {1}}));
  CHECK(b.psi.alpha() == mat({{-1}, {1}}));

  UnitorBundle l = unitor_left(xz, z, {vz});
  CHECK(compose_morphisms(l.rho, l.psi) == identity_morphism(xz));
  CHECK_FALSE(compose_morphisms(l.psi, l.rho) == identity_morphism(l.z));
}

TEST_CASE("constant glued potentials degenerate cleanly") {
  // X of z - 0, glued along x with f = 0: every ∂f vanishes.
  MatrixFactorization xz = mf1(1, z);
  UnitorBundle b = unitor_right(xz, 0, {vx});
  CHECK(b.unit.mf.p() == mat({{0}}));
  CHECK(b.z.potential() == z);
  CHECK(validate_morphism(b.rho).ok());
  CHECK(validate_morphism(b.psi).ok());
  CHECK(validate_morphism(naive_psi(b)).ok());
  CHECK(compose_morphisms(b.rho, b.psi) == identity_morphism(xz));

  // X of 5 - x, glued along z with g = 5.
  MatrixFactorization five = mf1(1, 5 - x);
  UnitorBundle l = unitor_left(five, 5, {vz});
  CHECK(validate_morphism(l.psi).ok());
  CHECK(validate_morphism(naive_psi(l)).ok());
  CHECK(compose_morphisms(l.rho, l.psi) == identity_morphism(five));
}

TEST_CASE("unitors have right inverses on every fixture, both sides") {
  for (const auto& fx : fixtures()) {
    for (Side side : {Side::right, Side::left}) {
      CAPTURE(fx.x.str());
      CAPTURE(side == Side::right ? "right" : "left");
      UnitorBundle b = side == Side::right ? unitor_right(fx.x, fx.f, fx.f_vars)
                                           : unitor_left(fx.x, fx.g, fx.g_vars);
      CHECK(b.z.potential() == fx.x.potential());
      CHECK(b.z.size() == fx.x.size() * (Eigen::Index{2} << (b.unit.generators() - 1)));
      CHECK(validate_morphism(b.rho).ok());
      CHECK(validate_morphism(b.psi).ok());
      CHECK(compose_morphisms(b.rho, b.psi) == identity_morphism(fx.x));
      CHECK_FALSE(compose_morphisms(b.psi, b.rho) == identity_morphism(b.z));
      CHECK_FALSE(killed_coordinates(b).empty());
      // The plain slice embedding is not a chain map once the glued potential moves.
      CHECK_FALSE(validate_morphism(naive_psi(b)).ok());

      // The layout is a permutation of the ambient basis carrying the graded
      // tensor differential onto Z.
      const PolyMatrix amb = ambient_differential(b);
      const auto& l = b.z_layout;
      CHECK(l.ambient == amb.rows());
      CHECK(static_cast<Eigen::Index>(l.even.size() + l.odd.size()) == l.ambient);
      CHECK(PolyMatrix(amb(l.odd, l.even)) == b.z.p());
      CHECK(PolyMatrix(amb(l.even, l.odd)) == b.z.q());
      CHECK(embed_differential(b.z, l) == amb);
    }
  }
}

TEST_CASE("naturality") {
  Gen g(51);
  for (const auto& fx : fixtures()) {
    for (Side side : {Side::right, Side::left}) {
      const auto& h = side == Side::right ? fx.f : fx.g;
      const auto& hv = side == Side::right ? fx.f_vars : fx.g_vars;
      CHECK(naturality_check(identity_morphism(fx.x), h, hv, side).ok());
      CHECK(naturality_check(scalar_morphism(fx.x, 3), h, hv, side).ok());
      CHECK(naturality_check(g.boundary_morphism(fx.x, fx.x, 1), h, hv, side).ok());
    }
  }
  // A morphism between different factorizations of the same potential.
  MatrixFactorization a = mf1(1, z - x), b = direct_sum(a, a);
  Morphism diag(a, b, mat({{1}, {2}}), mat({{1}, {2}}));
  REQUIRE(validate_morphism(diag).ok());
  CHECK(naturality_check(diag, x, {vx}).ok());
  CHECK(naturality_check(diag, z, {vz}, Side::left).ok());
}

TEST_CASE("naturality reports a non-morphism") {
  MatrixFactorization a = mf1(1, z - x);
  Morphism bad(a, a, mat({{1}}), mat({{0}}));
  NaturalityReport r = naturality_check(bad, x, {vx});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.extension.ok());
}

TEST_CASE("unitor input errors") {
  const Variable xp_var = vx.primed();
  MatrixFactorization clash(mat({{1}}), mat({{z - Polynomial(xp_var)}}), z - Polynomial(xp_var));
  CHECK_THROWS_AS(unitor_right(clash, x, {vx}), VariableOverlap);
  CHECK_THROWS_AS(unitor_right(mf1(1, z - x), x, {}), std::invalid_argument);
}
