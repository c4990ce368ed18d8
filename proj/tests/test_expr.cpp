#include "doctest.h"
#include "superrigid/expr.hpp"

using namespace superrigid;

TEST_CASE("parse_jet normal forms") {
  Ambient a(2, 3);
  Jet x1 = Jet::x(a, 0), k1 = Jet::xi(a, 0), k2 = Jet::xi(a, 1), k3 = Jet::xi(a, 2);
  CHECK(parse_jet("3/2*x1^2*xi1*xi3", a) == frac(3, 2) * (x1 * x1 * k1 * k3));
  CHECK(parse_jet("xi2*xi1", a) == -(k1 * k2));
  CHECK(parse_jet("x1^0", a) == Jet::constant(a, 1));
  CHECK(parse_jet("xi1*xi1", a).is_zero());
  CHECK(parse_jet("2 x1 xi1 - x1*xi1", a) == x1 * k1);
  CHECK(parse_jet("-1/3", a) == Jet::constant(a, frac(-1, 3)));
  CHECK(parse_jet("4/6", a) == Jet::constant(a, frac(2, 3)));
}

TEST_CASE("generator names") {
  Ambient a(4, 1);
  CHECK(parse_jet("p1*q2", a) == Jet::x(a, 0) * Jet::x(a, 3));
  CHECK(parse_jet("p", a) == Jet::x(a, 0));
  CHECK(parse_jet("q", a) == Jet::x(a, 1));
  Ambient t(1, 2, 1);
  CHECK(parse_jet("tau*xi1", t) == -(Jet::xi(t, 0) * Jet::xi(t, 1)));
  CHECK_THROWS_AS(parse_jet("tau", a), ParseError);
  CHECK_THROWS_AS(parse_jet("x5", a), ParseError);
  CHECK_THROWS_AS(parse_jet("p3", a), ParseError);
}

TEST_CASE("syntax errors carry a position") {
  Ambient a(2, 2);
  try {
    parse_jet("x1 + * xi1", a);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.pos() == 5);
  }
  try {
    parse_jet("x1 + y", a);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.pos() == 5);
    CHECK(std::string(e.what()).find("unknown generator") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_jet("", a), ParseError);
  CHECK_THROWS_AS(parse_jet("1/0", a), ParseError);
  CHECK_THROWS_AS(parse_jet("x1^", a), ParseError);
  CHECK_THROWS_AS(parse_jet("x1 D(x2)", a), ParseError);
  CHECK_THROWS_AS(parse_elem("D(x1)*x2", a), ParseError);
}

TEST_CASE("vector-field terms") {
  Ambient a(1, 2);
  Elem e = parse_elem("xi1*D(x1) - 2*x1*xi1*xi2*D(xi1) + x1", a);
  CHECK(e.size() == 3);
  Term t;
  t.mono.odd = 1;
  t.slot = 0;
  CHECK(e.at(t) == 1);
  Term f;
  f.mono.ex[0] = 1;
  CHECK(e.at(f) == 1);
}

TEST_CASE("render and reparse") {
  Ambient a(2, 3);
  for (const char* s : {"3/2*x1^2*xi1*xi3", "xi2*xi1 - x2 + 7", "x1*D(x2) + xi1*xi2*D(xi3) - 1/2*D(x1)",
                        "0", "-xi3*D(x1) + x1^3"}) {
    CAPTURE(s);
    Elem e = parse_elem(s, a);
    std::string r = render_elem(a, e);
    CHECK(parse_elem(r, a) == e);
    CHECK(render_elem(a, parse_elem(r, a)) == r);
  }
  CHECK(render_elem(a, parse_elem("xi2*xi1", a)) == "-xi1*xi2");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/4") == frac(-1, 2));
  CHECK(parse_rational(" 1/2") == frac(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}
