#include "doctest.h"

#include "starq/catalog.hpp"
#include "starq/envelope.hpp"
#include "starq/parse.hpp"
#include "test_util.hpp"

using namespace starq;

namespace {

PoissonStructure x1x2_bracket() {
  VarSet v = VarSet::numbered(2);
  SkewPolyMatrix X(2);
  X.set(0, 1, parse_poly("x1*x2", v));
  return PoissonStructure(v, X);
}

Rational tcoeff(const Tensor& t, const Word& w, int k) {
  auto it = t.terms().find(w);
  if (it == t.terms().end()) return Rational(0);
  return it->second[static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("symmetrize: single letter, pair, and multiset") {
  Tensor s1 = symmetrize(Monomial::var(0), 2);
  CHECK(tcoeff(s1, {0}, 0) == 1);
  CHECK(s1.terms().size() == 1);

  Tensor s2 = symmetrize(Monomial::var(0).times_var(1), 2);
  CHECK(tcoeff(s2, {0, 1}, 0) == rat(1, 2));
  CHECK(tcoeff(s2, {1, 0}, 0) == rat(1, 2));

  Tensor s3 = symmetrize(Monomial::var(0, 2).times_var(1), 2);
  CHECK(tcoeff(s3, {0, 0, 1}, 0) == rat(1, 3));
  CHECK(tcoeff(s3, {0, 1, 0}, 0) == rat(1, 3));
  CHECK(tcoeff(s3, {1, 0, 0}, 0) == rat(1, 3));
  CHECK(s3.terms().size() == 3);
}

TEST_CASE("normal_order: ordered words pass through") {
  PoissonStructure P = catalog("constant-sympl-2");
  Tensor t(2);
  t.add({0, 0, 1}, 0, 1);
  CHECK(normal_order(t, P) == t);
}

TEST_CASE("normal_order: single rewrite for the constant bracket") {
  PoissonStructure P = catalog("constant-sympl-2");
  Tensor t(1);
  t.add({1, 0}, 0, 1);
  Tensor expected(1);
  expected.add({0, 1}, 0, 1);
  expected.add({}, 1, -1);  // sigma{x2,x1} = -1
  CHECK(normal_order(t, P) == expected);
}

TEST_CASE("normal_order: two-pass rewrite for {x1,x2} = x1x2 at n=1") {
  PoissonStructure P = x1x2_bracket();
  Tensor t(1);
  t.add({1, 0}, 0, 1);
  Tensor expected(1);
  expected.add({0, 1}, 0, 1);
  expected.add({0, 1}, 1, -1);
  CHECK(normal_order(t, P) == expected);
}

TEST_CASE("normal_order is idempotent") {
  testutil::Rng rng(131);
  PoissonStructure P = catalog("linear-sl2");
  for (int rep = 0; rep < 10; ++rep) {
    Tensor t(3);
    for (int k = 0; k < 4; ++k) {
      Word w;
      int len = rng.uniform(0, 4);
      for (int i = 0; i < len; ++i) w.push_back(static_cast<std::uint8_t>(rng.uniform(0, 2)));
      t.add(w, rng.uniform(0, 3), Rational(rng.uniform(-3, 3)));
    }
    Tensor once = normal_order(t, P);
    CHECK(normal_order(once, P) == once);
  }
}

TEST_CASE("normal_order respects the defining relation") {
  // w and (swapped w + h sigma{..}) are congruent, so they normal-order
  // to the same tensor
  testutil::Rng rng(137);
  PoissonStructure P = catalog("gl2-quadratic");
  for (int rep = 0; rep < 10; ++rep) {
    Word w;
    int len = rng.uniform(2, 5);
    for (int i = 0; i < len; ++i) w.push_back(static_cast<std::uint8_t>(rng.uniform(0, 3)));
    std::size_t k = static_cast<std::size_t>(rng.uniform(0, len - 2));
    Tensor lhs(3);
    lhs.add(w, 0, 1);
    Word sw = w;
    std::swap(sw[k], sw[k + 1]);
    Tensor rhs(3);
    rhs.add(sw, 0, 1);
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
    Tensor pre(3), post(3);
    pre.add(prefix, 0, 1);
    post.add(suffix, 0, 1);
    rhs += (pre * symmetrize(P.X(w[k], w[k + 1]), 3) * post).shifted(1);
    CHECK(normal_order(lhs, P) == normal_order(rhs, P));
  }
}

TEST_CASE("h^0 part of normal_order(sigma(p)) is the ordered expansion of p") {
  testutil::Rng rng(139);
  PoissonStructure P = catalog("linear-sl2");
  for (int rep = 0; rep < 10; ++rep) {
    Polynomial p = rng.poly(3, 3);
    Tensor no = normal_order(symmetrize(p, 2), P);
    Tensor h0(2);
    for (const auto& [m, c] : p.terms()) {
      auto idx = m.indices();
      h0.add(Word(idx.begin(), idx.end()), 0, c);
    }
    // compare h^0 slices
    Tensor lhs(2);
    for (const auto& [w, cs] : no.terms()) lhs.add(w, 0, cs[0]);
    CHECK(lhs == h0);
  }
}

TEST_CASE("diamond via tensors and via the star product agree (2-variable case)") {
  PoissonStructure P = x1x2_bracket();
  // with two generators every antisymmetrized triple collapses
  Tensor dt = diamond_tensor(P, 0, 1, 1, 3);
  CHECK(dt.is_zero());
  StarProduct S = star_product(P, 3);
  CHECK(diamond_residual(S, 0, 1, 1).is_zero());
}

TEST_CASE("diamond tensor vanishes for linear and constant brackets") {
  for (const char* name : {"linear-sl2", "affine-central"}) {
    PoissonStructure P = catalog(name);
    CHECK(diamond_tensor(P, 0, 1, 2, 4).is_zero());
  }
  PoissonStructure C = catalog("constant-sympl-4");
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) CHECK(diamond_tensor(C, a, b, c, 4).is_zero());
}

TEST_CASE("h * diamond tensor is zero in the quotient (phi-y2 at order 3)") {
  PoissonStructure P = catalog("phi-y2");
  Tensor acc(3);
  const std::array<std::array<int, 3>, 3> cyc = {{{0, 1, 3}, {1, 3, 0}, {3, 0, 1}}};
  for (const auto& t : cyc) {
    Tensor xa(3);
    xa.add({static_cast<std::uint8_t>(t[0])}, 0, 1);
    Tensor s = symmetrize(P.X(t[1], t[2]), 3);
    acc += xa * s - s * xa;
  }
  CHECK(normal_order(acc.shifted(1), P).is_zero());
}

TEST_CASE("diamond residual orders: linear bracket vanishes through order 3") {
  PoissonStructure P = catalog("linear-sl2");
  StarProduct S = star_product(P, 3);
  CHECK(diamond_residual(S, 0, 1, 2).is_zero());
}

TEST_CASE("diamond h^3 coefficient is 1/144 of the obstruction component") {
  for (const char* name : {"phi-y2", "gl2-cubic", "phi-x3"}) {
    PoissonStructure P = catalog(name);
    StarProduct S = star_product(P, 3);
    for (int a = 0; a < P.nvars(); ++a)
      for (int b = a + 1; b < P.nvars(); ++b)
        for (int c = b + 1; c < P.nvars(); ++c) {
          HSeries d = diamond_residual(S, a, b, c);
          CHECK(d[0].is_zero());
          CHECK(d[1].is_zero());
          CHECK(d[2].is_zero());
          CHECK(d[3] * 144 == obstruction_component(P, a, b, c));
        }
  }
}

TEST_CASE("tau injectivity verdicts") {
  CHECK(tau_injective_to(catalog("linear-sl2"), 4).injective);
  CHECK(tau_injective_to(catalog("gl2-quadratic"), 4).injective);
  CHECK(tau_injective_to(catalog("aij-quadratic"), 4).injective);
  CHECK(tau_injective_to(catalog("phi-x3"), 4).injective);
  CHECK(tau_injective_to(catalog("phi-y2"), 3).injective);

  TauVerdict v = tau_injective_to(catalog("phi-y2"), 4);
  CHECK(!v.injective);
  CHECK(v.order == 4);
  CHECK(v.a == 0);
  CHECK(v.b == 1);
  CHECK(v.c == 3);

  CHECK(!tau_injective_to(catalog("gl2-cubic"), 4).injective);
  CHECK_THROWS_AS(tau_injective_to(catalog("phi-y2"), 5), std::invalid_argument);
}

TEST_CASE("tensor text form") {
  Tensor t(1);
  t.add({0, 1}, 0, rat(1, 2));
  t.add({}, 1, -1);
  CHECK(t.str() == "-1 * h^1 * ()\n1/2 * h^0 * (1 2)");
}
