#include "lgmf/demo.hpp"

#include <functional>
#include <ostream>
#include <string>

#include "lgmf/lgmf.hpp"

namespace lgmf {

namespace {

PolyMatrix mat1(const Polynomial& a) {
  PolyMatrix m(1, 1);
  m << a;
  return m;
}

PolyMatrix mat2(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d) {
  PolyMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

bool factors(const PolyMatrix& p, const PolyMatrix& q, const Polynomial& f) {
  try {
    MatrixFactorization(p, q, f);
    return true;
  } catch (const NotAFactorization&) {
    return false;
  }
}

}  // namespace

int run_worked_examples(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    out << (ok ? "PASS  " : "FAIL  ") << name;
    if (!why.empty()) out << "  (" << why << ")";
    out << '\n';
    if (!ok) ++failures;
  };

  const Variable vx("x"), vy("y"), vz("z");
  const Polynomial x(vx), y(vy), z(vz), xp(vx.primed()), yp(vy.primed());
  const std::vector<Variable> xy{vx, vy};

  check("M = [[0, x], [x^2, 0]] factors x^3", [&] {
    PolyMatrix m = mat2(0, x, x.pow(2), 0);
    return factors(m, m, x.pow(3));
  });
  check("M = [[0, 1], [x^3, 0]] factors x^3", [&] {
    PolyMatrix m = mat2(0, 1, x.pow(3), 0);
    return factors(m, m, x.pow(3));
  });
  check("([1], [x^3]) factors x^3", [&] { return factors(mat1(1), mat1(x.pow(3)), x.pow(3)); });
  check("M_q factors x^n for (n, q) in {(3,1), (5,2), (7,3)}", [&] {
    for (auto [n, q] : {std::pair{3u, 1u}, {5u, 2u}, {7u, 3u}}) {
      PolyMatrix m = mat2(0, x.pow(q), x.pow(n - q), 0);
      if (!factors(m, m, x.pow(n))) return false;
    }
    return true;
  });
  check("[[0, x], [x, 0]] does not factor x^3", [&] {
    PolyMatrix m = mat2(0, x, x, 0);
    return !factors(m, m, x.pow(3));
  });

  check("difference quotient d_1(x - y) = 1", [&] { return diff_quotient(x - y, xy, 1) == 1; });
  check("difference quotient d_2(x - y) = -1", [&] { return diff_quotient(x - y, xy, 2) == -1; });
  check("t4* (t2 t4 t7) = -t2 t7", [&] {
    return contract(4, ExtElement(7, ThetaWord({2, 4, 7}))) ==
           ExtElement(7, ThetaWord({2, 7}), Polynomial(-1));
  });
  check("ti*(tj) = delta_ij", [&] {
    for (unsigned i = 1; i <= 3; ++i) {
      for (unsigned j = 1; j <= 3; ++j) {
        ExtElement got = contract(i, ExtElement(3, ThetaWord({j})));
        ExtElement want = i == j ? ExtElement(3, ThetaWord()) : ExtElement(3);
        if (!(got == want)) return false;
      }
    }
    return true;
  });
  check("t1 t2 = -t2 t1", [&] {
    return wedge(2, ExtElement(2, ThetaWord({1}))) == ExtElement(2, ThetaWord({1, 2}), -1) &&
           wedge(1, ExtElement(2, ThetaWord({2}))) == ExtElement(2, ThetaWord({1, 2}), 1);
  });

  check("unit of f = x is ([1], [x - x'])", [&] {
    auto u = koszul_unit(x, {vx});
    return u.mf.p() == mat1(1) && u.mf.q() == mat1(x - xp) && u.mf.potential() == x - xp;
  });
  check("unit of f = x - y factors (x - y) - (x' - y') with rank 2", [&] {
    auto u = koszul_unit(x - y, xy);
    return u.mf.size() == 2 && u.mf.potential() == (x - y) - (xp - yp) &&
           u.mf.p() == mat2(1, -(y - yp), -1, x - xp);
  });

  check("four tensor variants of ([1],[x]) and ([1],[y]) are distinct factorizations of x + y",
        [&] {
          MatrixFactorization a(mat1(1), mat1(x), x), b(mat1(1), mat1(y), y);
          std::vector<MatrixFactorization> all;
          for (auto v : {Variant::standard, Variant::v1, Variant::v2, Variant::v3}) {
            all.push_back(yoshino(a, b, v));
            if (all.back().size() != 2 || all.back().potential() != x + y) return false;
          }
          for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
              if (all[i] == all[j]) return false;
          return true;
        });
  check("tensor of sizes 2 and 1 has size 2nm = 4", [&] {
    PolyMatrix m = mat2(0, x, x.pow(2), 0);
    return yoshino(MatrixFactorization(m, m, x.pow(3)), MatrixFactorization(mat1(1), mat1(y), y))
               .size() == 4;
  });

  const MatrixFactorization xz(mat1(1), mat1(z - x), z - x);
  check("rho o psi = id on ([1], [z - x])", [&] {
    auto b = unitor_right(xz, x, {vx});
    return compose_morphisms(b.rho, b.psi) == identity_morphism(xz);
  });
  check("psi o rho != id on ([1], [z - x])", [&] {
    auto b = unitor_right(xz, x, {vx});
    return !(compose_morphisms(b.psi, b.rho) == identity_morphism(b.z)) &&
           !killed_coordinates(b).empty();
  });
  check("psi is a map of factorizations", [&] {
    auto b = unitor_right(xz, x, {vx});
    auto [eq1, eq2] = morphism_equivalence_check(b.x, b.z, b.psi.beta(), b.psi.alpha());
    return eq1 && eq2;
  });
  check("rho is natural for id and 3 id", [&] {
    return naturality_check(identity_morphism(xz), x, {vx}).ok() &&
           naturality_check(scalar_morphism(xz, 3), x, {vx}).ok();
  });
  check("zero map certifies rho o psi ~ id", [&] {
    auto b = unitor_right(xz, x, {vx});
    return check_witness(xz, xz, compose_morphisms(b.rho, b.psi), identity_morphism(xz),
                         zero_witness(xz, xz))
        .ok();
  });

  out << (failures == 0 ? "all worked examples pass" : std::to_string(failures) + " failed")
      << '\n';
  return failures;
}

}  // namespace lgmf
