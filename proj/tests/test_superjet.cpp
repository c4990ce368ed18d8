#include "doctest.h"
#include "superrigid/superjet.hpp"

using namespace superrigid;

TEST_CASE("Grassmann products") {
  Ambient a(1, 2);
  Jet x = Jet::x(a, 0), x1 = Jet::xi(a, 0), x2 = Jet::xi(a, 1);
  CHECK((x * x).str() == "x1^2");
  CHECK(mul(mul(x1, x2), x1).is_zero());
  CHECK((x2 * x1).str() == "-xi1*xi2");
}

TEST_CASE("partial derivatives and orders") {
  Ambient a(1, 2);
  Jet x1 = Jet::xi(a, 0), x2 = Jet::xi(a, 1);
  CHECK(partial_xi(x1 * x2, 0) == x2);
  CHECK(partial_xi(x1 * x2, 1) == -x1);
  Jet f = Jet::x(a, 0) * Jet::x(a, 0);
  f.set_order(2);
  Jet d = partial_x(f, 0);
  CHECK(d.str() == "2*x1");
  CHECK(d.order() == 1);
}

TEST_CASE("euler operator") {
  Ambient a(1, 1);
  CHECK(euler(Jet::x(a, 0) * Jet::xi(a, 0)) == Jet::x(a, 0) * Jet::xi(a, 0) * Scalar(2));
  CHECK(euler(Jet::constant(a, 1)).is_zero());
  Ambient t(1, 2, 1);
  CHECK(euler(Jet::xi(t, 1)).is_zero());
}

TEST_CASE("supercommutativity and associativity on O(2,3)") {
  Ambient a(2, 3);
  auto monos = monomials_upto(a, 2);
  for (const auto& ma : monos)
    for (const auto& mb : monos) {
      Jet f = Jet::monomial(a, ma), g = Jet::monomial(a, mb);
      Scalar s = (ma.parity() & mb.parity()) ? -1 : 1;
      REQUIRE(mul(f, g) == mul(g, f) * s);
    }
  auto small = monomials_upto(a, 1);
  for (const auto& ma : small)
    for (const auto& mb : small)
      for (const auto& mc : small) {
        Jet f = Jet::monomial(a, ma), g = Jet::monomial(a, mb), h = Jet::monomial(a, mc);
        REQUIRE(mul(mul(f, g), h) == mul(f, mul(g, h)));
      }
}

TEST_CASE("odd derivatives are nilpotent and super-Leibniz") {
  Ambient a(1, 3);
  auto monos = monomials_upto(a, 2);
  for (int j = 0; j < 3; ++j)
    for (const auto& ma : monos) {
      Jet f = Jet::monomial(a, ma);
      REQUIRE(partial_xi(partial_xi(f, j), j).is_zero());
      for (const auto& mb : monos) {
        Jet g = Jet::monomial(a, mb);
        Scalar s = ma.parity() ? -1 : 1;
        REQUIRE(partial_xi(f * g, j) == partial_xi(f, j) * g + s * (f * partial_xi(g, j)));
      }
    }
}

TEST_CASE("truncation soundness") {
  Ambient a(2, 1);
  Jet f = Jet::x(a, 0) + Jet::x(a, 0) * Jet::x(a, 1) * Jet::x(a, 1);
  Jet g = Jet::constant(a, 1) + Jet::x(a, 1) * Jet::xi(a, 0);
  Jet exact = partial_x(f * g, 1);
  Jet ft = truncate(f, 2);
  Jet approx = partial_x(ft * g, 1);
  CHECK(approx.order() == 1);
  CHECK(truncate(exact, approx.order()) == approx);
}
