#include "doctest.h"
#include "superrigid/brackets.hpp"

using namespace superrigid;

TEST_CASE("Buttin bracket values") {
  Ambient a(1, 1);
  Jet x = Jet::x(a, 0), k = Jet::xi(a, 0);
  CHECK(buttin(x, k) == Jet::constant(a, 1));
  CHECK(buttin(k, x) == Jet::constant(a, -1));
  Ambient b(2, 2);
  Jet x1 = Jet::x(b, 0);
  CHECK(buttin(x1 * x1, Jet::xi(b, 0) * Jet::xi(b, 1)).str() == "2*x1*xi2");
  CHECK_THROWS(buttin(Jet::x(Ambient(1, 2), 0), Jet::x(Ambient(1, 2), 0)));
  CHECK_THROWS(buttin(x + k, x));
}

TEST_CASE("K bracket values") {
  Ambient a(1, 2, 1);
  Jet one = Jet::constant(a, 1), tau = Jet::xi(a, 1), x = Jet::x(a, 0);
  CHECK(k_bracket(one, tau) == Jet::constant(a, -2));
  CHECK(k_bracket(x, tau) == -x);
  CHECK(k_bracket(tau, tau).is_zero());
  CHECK_THROWS(k_bracket(Jet::x(Ambient(1, 1), 0), Jet::x(Ambient(1, 1), 0)));
}

TEST_CASE("even generalized Poisson bracket") {
  Ambient a(2, 1);
  CHECK(gen_poisson_even(Jet::x(a, 0), Jet::x(a, 1)) == Jet::constant(a, 1));
  CHECK(gen_poisson_even(Jet::xi(a, 0), Jet::xi(a, 0)) == Jet::constant(a, -1));
  CHECK(make_gen_poisson(a).D(Jet::x(a, 0) * Jet::xi(a, 0)).is_zero());
  Ambient c(3, 0);
  auto kind = make_gen_poisson(c);
  CHECK(!kind.D(Jet::x(c, 2)).is_zero());
}

TEST_CASE("quasi-Poisson and Jacobi-Mayer") {
  Ambient a(2, 0);
  VectorField dx = VectorField::coordinate(a, 0), dy = VectorField::coordinate(a, 1);
  Jet x = Jet::x(a, 0), y = Jet::x(a, 1);
  CHECK(quasi_poisson(VectorField(a), {{dx, dy}}, x, y) == Jet::constant(a, 1));
  VectorField Z = Scalar(2) * dx;
  VectorField X = (x + y) * dx;
  CHECK(quasi_poisson(Z, {{X, dy}}, x, y) == x + y * Scalar(3));
  CHECK(quasi_poisson(Z, {{X, dy}}, x * x, x * y) == -quasi_poisson(Z, {{X, dy}}, x * y, x * x));

  Ambient c(3, 0);
  Jet X1 = Jet::x(c, 0), Y1 = Jet::x(c, 1), Z1 = Jet::x(c, 2);
  CHECK(jacobi_mayer(X1, Y1) == Jet::constant(c, 1));
  CHECK(jacobi_mayer(X1, Z1) == X1);
  CHECK(jacobi_mayer(Y1, Z1).is_zero());
  std::vector<FieldPair> pairs{{VectorField::coordinate(c, 0), VectorField::coordinate(c, 1)},
                               {X1 * VectorField::coordinate(c, 0), VectorField::coordinate(c, 2)}};
  for (const auto& m : monomials_upto(c, 3))
    for (const auto& n : monomials_upto(c, 3)) {
      Jet f = Jet::monomial(c, m), g = Jet::monomial(c, n);
      REQUIRE(jacobi_mayer(f, g) == quasi_poisson(VectorField(c), pairs, f, g));
    }
}

TEST_CASE("gauge transformation") {
  Ambient a(1, 1);
  Jet one = Jet::constant(a, 1), x = Jet::x(a, 0), k = Jet::xi(a, 0);
  auto g = gauge_transform(make_buttin(a), one + x, 4);
  CHECK(g.eval(one, one).is_zero());
  CHECK(g.eval(one, k) == one);
  CHECK(gauged_D(g, k) == one);
  CHECK_THROWS(gauge_transform(make_buttin(a), one + x * k, 4));
  try {
    gauge_transform(make_buttin(a), one + x * k, 4);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("2*x1*xi1") != std::string::npos);
  }
  CHECK(mul(jet_inverse(one + x, 5), one + x) == truncate(one, 5));
}

TEST_CASE("Jordan product on P + bar P") {
  Ambient a(2, 0);
  auto kind = make_gen_poisson(a);
  Jet p = Jet::x(a, 0), q = Jet::x(a, 1), z(a);
  CHECK(jp_product(kind, {p, z}, {q, z}) == JPElem{p * q, z});
  CHECK(jp_product(kind, {z, p}, {z, q}) == JPElem{Jet::constant(a, 1), z});
  CHECK(jp_product(kind, {z, Jet::constant(a, 1)}, {p, z}) == JPElem{z, p});
}

TEST_CASE("axioms: Buttin on O(2,2) and K on O(1,2) up to degree 2") {
  Ambient b(2, 2);
  auto rep = check_bracket_axioms(make_buttin(b), monomials_upto(b, 2));
  CHECK_MESSAGE(rep.ok(), rep.first_failure);
  Ambient k(1, 2, 1);
  auto rk = check_bracket_axioms(make_k_bracket(k), monomials_upto(k, 2));
  CHECK_MESSAGE(rk.ok(), rk.first_failure);
  Ambient c(3, 1);
  auto rc = check_bracket_axioms(make_gen_poisson(c), monomials_upto(c, 1));
  CHECK_MESSAGE(rc.ok(), rc.first_failure);
}
