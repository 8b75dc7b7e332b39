#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace lgmf;
using namespace lgmf::testing;

namespace {

const Variable vx("x"), vy("y"), vz("z");
const Polynomial x(vx), y(vy), z(vz);

MatrixFactorization mf1(Polynomial p, Polynomial q) {
  return MatrixFactorization(mat({{p}}), mat({{q}}), p * q);
}

Morphism zero(const MatrixFactorization& a) { return zero_morphism(a, a); }

// d_Y λ + λ d_X, computed on the full modules with the reference product.
PolyMatrix full_boundary(const MatrixFactorization& a, const MatrixFactorization& b,
                         const HomotopyWitness& w) {
  return mul_reference(b.differential(), w.full()) + mul_reference(w.full(), a.differential());
}

}  // namespace

TEST_CASE("zero witness for equal morphisms") {
  MatrixFactorization a = mf1(1, x);
  CHECK(check_witness(a, a, identity_morphism(a), identity_morphism(a), zero_witness(a, a)).ok());
  CHECK_FALSE(check_witness(a, a, identity_morphism(a), zero(a), zero_witness(a, a)).ok());
}

TEST_CASE("x * id is null-homotopic on ([1], [x])") {
  MatrixFactorization a = mf1(1, x);
  // λ = d/2 works for f·id, since d² = f.
  HomotopyWitness by_hand{mat({{Rational(1, 2)}}), mat({{Rational(1, 2) * x}})};
  CHECK(check_witness(a, a, zero(a), scalar_morphism(a, x), by_hand).ok());

  WitnessSearch s = find_witness(a, a, zero(a), scalar_morphism(a, x), 1);
  REQUIRE(s.found());
  CHECK(check_witness(a, a, zero(a), scalar_morphism(a, x), *s.witness).ok());
  CHECK(s.witness->degree == 1);
  CHECK(full_boundary(a, a, *s.witness) == scalar_matrix(2, x));

  WitnessSearch n = is_null_homotopic(a, a, scalar_morphism(a, x), 1);
  REQUIRE(n.found());
  CHECK(full_boundary(a, a, *n.witness) == scalar_matrix(2, -x));
}

TEST_CASE("identity on ([1], [x]) is null-homotopic since the module is contractible") {
  MatrixFactorization a = mf1(1, x);
  WitnessSearch s = is_null_homotopic(a, a, identity_morphism(a), 0);
  REQUIRE(s.found());
  CHECK(full_boundary(a, a, *s.witness) == -identity(2));
}

TEST_CASE("identity on ([x], [x]) has no low-degree null homotopy") {
  MatrixFactorization a = mf1(x, x);
  for (unsigned d = 0; d <= 3; ++d) {
    WitnessSearch s = is_null_homotopic(a, a, identity_morphism(a), d);
    CHECK_FALSE(s.found());
    CHECK(s.status == WitnessSearch::Status::not_found_within_degree);
    CHECK(s.unknowns > 0);
  }
  // 2 * id is still not a boundary; x * id is.
  CHECK_FALSE(is_null_homotopic(a, a, scalar_morphism(a, 2), 2).found());
  CHECK(is_null_homotopic(a, a, scalar_morphism(a, x), 1).found());
}

TEST_CASE("degree zero search with equal endpoints") {
  Gen g(61);
  MatrixFactorization a = g.factorization({vx, vy}, 2, 2);
  Morphism m = g.boundary_morphism(a, a, 1);
  WitnessSearch s = find_witness(a, a, m, m, 0);
  REQUIRE(s.found());
  CHECK(check_witness(a, a, m, m, *s.witness).ok());
}

TEST_CASE("witness shapes are checked") {
  MatrixFactorization a = mf1(1, x), b = direct_sum(a, a);
  HomotopyWitness w = zero_witness(a, a);
  CHECK_THROWS_AS(check_witness(a, b, zero_morphism(a, b), zero_morphism(a, b), w), ShapeMismatch);
  CHECK_THROWS_AS(check_witness(a, a, zero_morphism(a, b), zero_morphism(a, b), w), ShapeMismatch);
}

TEST_CASE("random boundaries are recovered") {
  Gen g(62);
  for (int trial = 0; trial < 12; ++trial) {
    MatrixFactorization a = g.factorization({vx, vy}, g.uniform(1, 2), 2);
    Morphism phi = g.boundary_morphism(a, a, 1);
    Morphism psi = g.boundary_morphism(a, a, 1);
    // ψ - φ = dμ + μd for μ of degree <= 1 in each entry, so degree 1 suffices.
    WitnessSearch s = find_witness(a, a, phi, psi, 1);
    REQUIRE(s.found());
    CHECK(check_witness(a, a, phi, psi, *s.witness).ok());
    // Sum of the search's witness and the difference of the morphisms on the full module.
    CHECK(full_boundary(a, a, *s.witness) == PolyMatrix(psi.full() - phi.full()));
  }
}

TEST_CASE("homotopy is an equivalence relation on witnesses") {
  Gen g(63);
  for (int trial = 0; trial < 8; ++trial) {
    MatrixFactorization a = g.factorization({vx, vy}, 2, 2);
    Morphism f1 = g.boundary_morphism(a, a, 1);
    Morphism f2 = g.boundary_morphism(a, a, 1);
    Morphism f3 = g.boundary_morphism(a, a, 1);
    CHECK(check_witness(a, a, f1, f1, zero_witness(a, a)).ok());

    auto w12 = find_witness(a, a, f1, f2, 1);
    auto w23 = find_witness(a, a, f2, f3, 1);
    REQUIRE(w12.found());
    REQUIRE(w23.found());
    HomotopyWitness neg{-w12.witness->lambda0, -w12.witness->lambda1};
    CHECK(check_witness(a, a, f2, f1, neg).ok());
    HomotopyWitness sum{w12.witness->lambda0 + w23.witness->lambda0,
                        w12.witness->lambda1 + w23.witness->lambda1};
    CHECK(check_witness(a, a, f1, f3, sum).ok());
  }
}

TEST_CASE("unitor round trip is homotopic to the identity only up to the search bound") {
  MatrixFactorization a = mf1(1, z - x);
  UnitorBundle b = unitor_right(a, x, {vx});
  // ρ∘ψ = id on the nose, so the zero witness certifies it.
  CHECK(check_witness(a, a, compose_morphisms(b.rho, b.psi), identity_morphism(a), zero_witness(a, a)).ok());
  // ψ∘ρ vs id_Z: X has a unit entry, so Z is contractible and both are null-homotopic.
  Morphism round = compose_morphisms(b.psi, b.rho);
  WitnessSearch s = find_witness(b.z, b.z, round, identity_morphism(b.z), 1);
  REQUIRE(s.found());
  CHECK(check_witness(b.z, b.z, round, identity_morphism(b.z), *s.witness).ok());
}
