#include "doctest.h"

#include "starq/bracket_file.hpp"
#include "starq/catalog.hpp"
#include "starq/parse.hpp"
#include "starq/poisson.hpp"
#include "test_util.hpp"

using namespace starq;

namespace {

PoissonStructure broken3() {
  VarSet v = VarSet::numbered(3);
  SkewPolyMatrix X(3);
  X.set(0, 1, parse_poly("x2", v));
  X.set(1, 2, parse_poly("x1", v));
  return PoissonStructure(v, X, false);
}

// Expected U block of from_phi, parsed over (u1,u2,v1,v2).
void check_U(const PoissonStructure& P, const std::array<std::array<std::string, 2>, 2>& U) {
  REQUIRE(P.nvars() == 4);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) CHECK(P.X(j, 2 + k) == parse_poly(U[j][k], P.vars()));
  // the off-block entries vanish
  CHECK(P.X(0, 1).is_zero());
  CHECK(P.X(2, 3).is_zero());
}

}  // namespace

TEST_CASE("jacobi residual: vacuous and padded two-variable cases") {
  VarSet v = VarSet::numbered(3);
  SkewPolyMatrix X(3);
  X.set(0, 1, parse_poly("x1*x2", v));
  PoissonStructure P(v, X);
  CHECK(P.jacobi_residual(0, 1, 2).is_zero());
}

TEST_CASE("jacobi residual: sl2 bracket") {
  PoissonStructure P = catalog("linear-sl2");
  CHECK(P.jacobi_residual(0, 1, 2).is_zero());
}

TEST_CASE("jacobi residual: broken bracket has witness -x1") {
  PoissonStructure P = broken3();
  CHECK(P.jacobi_residual(0, 1, 2) == parse_poly("-x1", P.vars()));
  CHECK_THROWS_AS(PoissonStructure(P.vars(), P.matrix(), true), JacobiError);
}

TEST_CASE("jacobi derivative residual") {
  PoissonStructure good = catalog("gl2-cubic");
  for (int m = 0; m < 4; ++m) {
    CHECK(good.jacobi_derivative_residual(0, 1, 2, m).is_zero());
    CHECK(good.jacobi_derivative_residual(0, 1, 3, m).is_zero());
  }
  PoissonStructure bad = broken3();
  // definitional identity, and the frozen value d^1(-x1) = -1
  for (int m = 0; m < 3; ++m)
    CHECK(bad.jacobi_derivative_residual(0, 1, 2, m) == bad.jacobi_residual(0, 1, 2).derivative(m));
  CHECK(bad.jacobi_derivative_residual(0, 1, 2, 0) == Polynomial::constant(-1));
}

TEST_CASE("from_phi: phi = x^3") {
  check_U(from_phi(parse_poly("x^3", phi_vars()), 2),
          {{{"u1^2 - u2", "u1*u2"}, {"u1*u2", "u2^2"}}});
}

TEST_CASE("from_phi: phi = y") {
  check_U(from_phi(parse_poly("y", phi_vars()), 2), {{{"v1", "v2"}, {"v2", "u1*v2 - u2*v1"}}});
}

TEST_CASE("from_phi: phi = y^2") {
  check_U(from_phi(parse_poly("y^2", phi_vars()), 2),
          {{{"2*v1*v2 - u1*v1^2", "v2^2 - u2*v1^2"}, {"v2^2 - u2*v1^2", "u1*v2^2 - 2*u2*v1*v2"}}});
}

TEST_CASE("from_phi: phi = x^4") {
  check_U(from_phi(parse_poly("x^4", phi_vars()), 2),
          {{{"-u1^3 + 2*u1*u2", "u2^2 - u1^2*u2"}, {"u2^2 - u1^2*u2", "-u1*u2^2"}}});
}

TEST_CASE("from_phi is additive: x^3 + y") {
  PoissonStructure a = from_phi(parse_poly("x^3", phi_vars()), 2);
  PoissonStructure b = from_phi(parse_poly("y", phi_vars()), 2);
  PoissonStructure s = from_phi(parse_poly("x^3 + y", phi_vars()), 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(s.X(i, j) == a.X(i, j) + b.X(i, j));
}

TEST_CASE("from_phi: d=1 and d=3 stay Poisson") {
  CHECK(from_phi(parse_poly("x^2 + y", phi_vars()), 1).nvars() == 2);
  PoissonStructure P = from_phi(parse_poly("y^2", phi_vars()), 3);
  CHECK(P.nvars() == 6);  // validation ran in the constructor
}

TEST_CASE("unipoly: the two division routines agree") {
  testutil::Rng rng(71);
  using unipoly::UniPoly;
  for (int rep = 0; rep < 20; ++rep) {
    int d = rng.uniform(1, 3);
    UniPoly u(static_cast<std::size_t>(d) + 1);
    u[static_cast<std::size_t>(d)] = Polynomial::constant(1);
    for (int k = 0; k < d; ++k) u[static_cast<std::size_t>(k)] = rng.poly(4, 2, 2);
    UniPoly p(static_cast<std::size_t>(rng.uniform(1, 7)));
    for (auto& c : p) c = rng.poly(4, 2, 2);
    UniPoly r1 = unipoly::rem_monic(p, u);
    UniPoly r2 = unipoly::rem_monic_substitution(p, u);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1[i] == r2[i]);
  }
}

TEST_CASE("catalog: every entry is Jacobi-valid and round-trips") {
  for (const auto& name : catalog_names()) {
    PoissonStructure P = catalog(name);  // construction validates
    BracketFile f = parse_bracket_text(catalog_text(name));
    CHECK(f.name == name);
    PoissonStructure Q = to_poisson(f);
    CHECK(Q.vars() == P.vars());
    CHECK(Q.matrix() == P.matrix());
  }
  CHECK_THROWS_AS(catalog("no-such-bracket"), std::invalid_argument);
}

TEST_CASE("catalog: named examples") {
  PoissonStructure c2 = catalog("constant-sympl-2");
  CHECK(c2.X(0, 1) == Polynomial::constant(1));
  CHECK(c2.is_constant());

  PoissonStructure gl2 = catalog("gl2-cubic");
  CHECK(gl2.X(0, 1) == parse_poly("x1^2*x2", gl2.vars()));
  CHECK(gl2.X(1, 2) == parse_poly("x2*x3*(x4 - x1)", gl2.vars()));
  CHECK(gl2.degree() == 3);

  PoissonStructure aij = catalog("aij-quadratic");
  CHECK(aij.X(0, 1) == parse_poly("x1*x2", aij.vars()));
  CHECK(aij.X(2, 3).is_zero());

  PoissonStructure py2 = catalog("phi-y2");
  CHECK(py2.X(0, 2) == parse_poly("2*x3*x4 - x1*x3^2", py2.vars()));
}

TEST_CASE("bracket file parse errors") {
  CHECK_THROWS_AS(parse_bracket_text("vars: x1 x2\n{x2,x1} = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_bracket_text("vars: x1 x2\n{x1,x2} = 1\n{x1,x2} = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_bracket_text("{x1,x2} = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_bracket_text("vars: x1 x2\n{x1,x3} = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_bracket_text("vars: x1 x2\nnonsense\n"), ParseError);
}

TEST_CASE("bracket text round-trip through the parser") {
  PoissonStructure P = catalog("phi-y2");
  std::string text = bracket_text("phi-y2", P);
  BracketFile f = parse_bracket_text(text);
  CHECK(to_poisson(f).matrix() == P.matrix());
}
