#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace lgmf;
using namespace lgmf::testing;

namespace {

const Variable vx("x"), vy("y"), vz("z");
const Polynomial x(vx), y(vy), xp(vx.primed()), yp(vy.primed());

ExtElement word(unsigned n, std::vector<unsigned> idx, Polynomial c = 1) {
  return ExtElement(n, ThetaWord(idx), c);
}

// θ_i ∧ w by sorting the concatenated index list.
ExtElement wedge_reference(unsigned i, ThetaWord w, unsigned n) {
  auto idx = w.indices();
  if (std::find(idx.begin(), idx.end(), i) != idx.end()) return ExtElement(n);
  std::vector<unsigned> seq{i};
  seq.insert(seq.end(), idx.begin(), idx.end());
  int sign = sort_sign(seq);
  std::sort(seq.begin(), seq.end());
  return ExtElement(n, ThetaWord(seq), sign);
}

}  // namespace

TEST_CASE("wedge examples") {
  CHECK(wedge(1, word(3, {1})).is_zero());
  CHECK(wedge(2, word(3, {1})) == word(3, {1, 2}, -1));
  CHECK(wedge(1, word(3, {2, 3})) == word(3, {1, 2, 3}));
  CHECK_THROWS_AS(wedge(4, word(3, {1})), IndexOutOfRange);
  CHECK_THROWS_AS(wedge(0, word(3, {1})), IndexOutOfRange);
}

TEST_CASE("contract examples") {
  CHECK(contract(4, word(7, {2, 4, 7})) == word(7, {2, 7}, -1));
  CHECK(contract(1, word(1, {1})) == word(1, {}));
  CHECK(contract(2, word(2, {1})).is_zero());
  CHECK_THROWS_AS(contract(3, word(2, {1})), IndexOutOfRange);
}

TEST_CASE("koszul_diff examples") {
  CHECK(koszul_diff(x, {vx}, word(1, {1})) == word(1, {}, x - xp));
  CHECK(koszul_diff(x - y, {vx, vy}, word(2, {})) == word(2, {1}) - word(2, {2}));
  CHECK(koszul_diff(x - y, {vx, vy}, word(2, {1, 2})) ==
        word(2, {2}, x - xp) - word(2, {1}, y - yp));
}

TEST_CASE("basis order is length then lexicographic") {
  auto all = basis_words(3);
  std::vector<std::vector<unsigned>> got;
  for (auto w : all) got.push_back(w.indices());
  std::vector<std::vector<unsigned>> want{{},     {1},    {2},    {3},
                                          {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  CHECK(got == want);
  CHECK(basis_words(3, 0).size() == 4);
  CHECK(basis_words(3, 1).size() == 4);
}

TEST_CASE("wedge agrees with the permutation-sign oracle") {
  for (unsigned n = 1; n <= 4; ++n)
    for (auto w : basis_words(n))
      for (unsigned i = 1; i <= n; ++i) CHECK(wedge(i, ExtElement(n, w)) == wedge_reference(i, w, n));
}

TEST_CASE("contraction is a graded derivation") {
  // θ_i*(θ_j ∧ w) = δ_ij w - θ_j ∧ θ_i*(w)
  for (unsigned n = 1; n <= 4; ++n)
    for (auto w : basis_words(n))
      for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
          ExtElement e(n, w);
          ExtElement lhs = contract(i, wedge(j, e));
          ExtElement rhs = (i == j ? e : ExtElement(n)) - wedge(j, contract(i, e));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("contract twice vanishes and both maps flip parity") {
  Gen g(21);
  const std::vector<Variable> vars{vx, vy};
  for (unsigned n = 1; n <= 4; ++n) {
    ExtElement e(n);
    for (auto w : basis_words(n)) e.add(w, g.poly(vars, 2, 2));
    for (unsigned i = 1; i <= n; ++i) {
      CHECK(contract(i, contract(i, e)).is_zero());
      CHECK(wedge(i, wedge(i, e)).is_zero());
      CHECK(contract(i, e.even_part()).even_part().is_zero());
      CHECK(contract(i, e.odd_part()).odd_part().is_zero());
      CHECK(wedge(i, e.even_part()).even_part().is_zero());
      CHECK(wedge(i, e.odd_part()).odd_part().is_zero());
    }
  }
}

TEST_CASE("koszul differential squares to f(x) - f(x')") {
  Gen g(22);
  const std::vector<Variable> all{vx, vy, vz};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Variable> vars(all.begin(), all.begin() + g.uniform(1, 3));
    Polynomial f = g.poly(vars, 4, 5);
    KoszulDifferential d(f, vars);
    const auto n = d.generators();
    for (auto w : basis_words(n)) {
      ExtElement e(n, w);
      CHECK(d(d(e)) == d.square() * e);
      // Parity flips termwise.
      ExtElement image = d(e);
      CHECK((w.parity() == 0 ? image.even_part() : image.odd_part()).is_zero());
    }
  }
}

TEST_CASE("operator algebra of A_i and B_i") {
  Gen g(23);
  const std::vector<Variable> all{vx, vy, vz};
  for (unsigned n = 1; n <= 3; ++n) {
    std::vector<Variable> vars(all.begin(), all.begin() + n);
    Polynomial f = g.poly(vars, 3, 4);
    KoszulDifferential d(f, vars);
    for (auto w : basis_words(n)) {
      ExtElement e(n, w);
      for (unsigned i = 1; i <= n; ++i) {
        CHECK(d.a(i, d.a(i, e)).is_zero());
        CHECK(d.b(i, d.b(i, e)).is_zero());
        Polynomial xi(vars[i - 1]), xi_p(vars[i - 1].primed());
        CHECK(d.a(i, d.b(i, e)) + d.b(i, d.a(i, e)) == ((xi - xi_p) * d.partial(i)) * e);
        for (unsigned j = 1; j <= n; ++j) {
          if (i == j) continue;
          CHECK(d.a(i, d.b(j, e)) == ExtElement(n) - d.b(j, d.a(i, e)));
          CHECK(d.a(i, d.a(j, e)) == ExtElement(n) - d.a(j, d.a(i, e)));
          CHECK(d.b(i, d.b(j, e)) == ExtElement(n) - d.b(j, d.b(i, e)));
        }
      }
    }
  }
}

TEST_CASE("collapsed empty-word coefficient of the differential vanishes") {
  Gen g(24);
  const std::vector<Variable> all{vx, vy, vz};
  for (unsigned n = 1; n <= 3; ++n) {
    std::vector<Variable> vars(all.begin(), all.begin() + n);
    Polynomial f = g.poly(vars, 3, 4);
    KoszulDifferential d(f, vars);
    for (auto w : basis_words(n)) {
      Polynomial c = d(ExtElement(n, w)).coefficient(ThetaWord());
      CHECK(substitute(c, collapse_map(vars)).is_zero());
    }
  }
}

TEST_CASE("operator_matrix reads coordinates column by column") {
  auto m = operator_matrix([](const ExtElement& e) { return wedge(1, e); }, 2, basis_words(2, 1),
                           basis_words(2, 0));
  // θ1∧θ1 = 0, θ1∧θ2 = θ1θ2.
  CHECK(m == mat({{0, 0}, {0, 1}}));
  CHECK_THROWS_AS(operator_matrix([](const ExtElement& e) { return e; }, 2, basis_words(2, 1),
                                  basis_words(2, 0)),
                  std::logic_error);
}
