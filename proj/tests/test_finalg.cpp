#include <random>

#include "doctest.h"
#include "superrigid/finalg.hpp"

using namespace superrigid;
using Sym = FinSuperAlg::Symmetry;

namespace {

FinSuperAlg js02() {
  return make_algebra_upper("JS02", {0, 0}, {{{0, 0}, {{1, 1}}}, {{1, 1}, {{0, 1}}}}, Sym::Commutative,
                            {"a", "b"});
}

FinSuperAlg sl2() {
  // e, h, f with [h,e]=2e, [h,f]=-2f, [e,f]=h
  return make_algebra_upper("sl2", {0, 0, 0},
                            {{{0, 1}, {{0, -2}}}, {{1, 2}, {{2, -2}}}, {{0, 2}, {{1, 1}}}},
                            Sym::Anticommutative, {"e", "h", "f"});
}

FinSuperAlg lw02() {
  return make_algebra("LW02", {0, 1},
                      {{{0, 1}, {{1, 1}}}, {{1, 0}, {{1, -1}}}, {{1, 1}, {{0, 1}}}},
                      Sym::Anticommutative, {"a", "abar"});
}

MultiLinMap random_map(const WSpace& W, int k, int parity, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  MultiLinMap f{k, {}};
  for (int i = 0; i < W.size(k); ++i)
    if (W.entry_parity(i, k) == parity) {
      int c = dist(rng);
      if (c) f.t.emplace_back(i, c);
    }
  return W.symmetrize(f);
}

}  // namespace

TEST_CASE("box product basics") {
  FinSuperAlg J = js02();
  WSpace W = J.space();
  MultiLinMap a = W.element({{0, 1}});
  MultiLinMap ma = W.w_bracket(J.mu, a);
  CHECK(ma.k == 0);
  CHECK(W.eval(ma, {0}) == SVec{{1, 1}});
  MultiLinMap f = left_mult_op(J, {{0, 1}});
  CHECK(W.box(f, a).t == SVec{{1, 1}});
  CHECK(W.box(a, f).is_zero());
  CHECK_THROWS(W.box(a, a));
}

TEST_CASE("act and its agreement with the W(J) bracket") {
  FinSuperAlg J = js02();
  WSpace W = J.space();
  CHECK(W.act(W.identity(), J.mu).t == scaled(J.mu.t, -1));
  CHECK(W.act(MultiLinMap{0, {}}, J.mu).is_zero());
  std::mt19937 rng(7);
  WSpace V({0, 0, 1, 1});
  for (int r = 0; r < 20; ++r) {
    MultiLinMap f = random_map(V, 0, r & 1, rng);
    MultiLinMap B = random_map(V, 1, (r >> 1) & 1, rng);
    REQUIRE(V.act(f, B) == V.w_bracket(f, B));
  }
}

TEST_CASE("W(J) axioms over J of dim (2|2)") {
  WSpace W({0, 0, 1, 1});
  std::mt19937 rng(2024);
  int triples = 0;
  for (int r = 0; r < 60; ++r) {
    int ka = r % 3 - 1, kb = (r / 3) % 3 - 1, kc = (r / 9) % 3 - 1;
    MultiLinMap a = random_map(W, ka, r & 1, rng);
    MultiLinMap b = random_map(W, kb, (r >> 1) & 1, rng);
    MultiLinMap c = random_map(W, kc, (r >> 2) & 1, rng);
    int pa = W.parity(a), pb = W.parity(b), pc = W.parity(c);
    if (ka + kb >= -1) {
      MultiLinMap ab = W.w_bracket(a, b), ba = W.w_bracket(b, a);
      REQUIRE(ab.t == scaled(ba.t, (pa & pb) ? 1 : -1));
    }
    if (ka + kb >= -1 && kb + kc >= -1 && ka + kc >= -1 && ka + kb + kc >= -1) {
      MultiLinMap lhs = W.w_bracket(a, W.w_bracket(b, c));
      MultiLinMap rhs = add_maps(W.w_bracket(W.w_bracket(a, b), c),
                                 MultiLinMap{ka + kb + kc, scaled(W.w_bracket(b, W.w_bracket(a, c)).t,
                                                                  (pa & pb) ? -1 : 1)});
      REQUIRE(lhs == rhs);
      ++triples;
    }
    if (ka >= 0 && ka + kb >= -1 && ka + kc >= -1 && kb + kc >= -1 && ka + kb + kc >= -1 &&
        (kb >= 0 || kc >= 0 || true)) {
      auto assoc = [&](const MultiLinMap& x, const MultiLinMap& y, const MultiLinMap& z) {
        MultiLinMap l = W.box(W.box(x, y), z);
        MultiLinMap rr = (y.k >= 0 || z.k >= -1) && y.k + z.k >= -1 ? W.box(x, W.box(y, z)) : MultiLinMap{l.k, {}};
        return MultiLinMap{l.k, add(l.t, scaled(rr.t, -1))};
      };
      if (kb + kc >= -1) {
        MultiLinMap x = assoc(a, b, c), y = assoc(a, c, b);
        REQUIRE(x.t == scaled(y.t, (pb & pc) ? -1 : 1));
      }
    }
  }
  CHECK(triples > 0);
}

TEST_CASE("left multiplication operators") {
  FinSuperAlg J = js02();
  WSpace W = J.space();
  MultiLinMap ma = left_mult_op(J, {{0, 1}});
  CHECK(W.eval(ma, {0}) == SVec{{1, 1}});
  CHECK(W.eval(ma, {1}).empty());
  FinSuperAlg one = make_algebra("unit", {0}, {{{0, 0}, {{0, 1}}}}, Sym::Commutative);
  CHECK(left_mult_op(one, {{0, 1}}) == one.space().identity());
  FinSuperAlg lw = lw02();
  MultiLinMap la = left_mult_op(lw, {{0, 1}});
  CHECK(lw.space().eval(la, {0}).empty());
  CHECK(lw.space().eval(la, {1}) == SVec{{1, 1}});
}

TEST_CASE("Str and R of small algebras") {
  CHECK(str_algebra(js02()).dim() == 3);
  CHECK(related_products(js02()).dim() == 4);
  FinSuperAlg one = make_algebra("unit", {0}, {{{0, 0}, {{0, 1}}}}, Sym::Commutative);
  CHECK(str_algebra(one).dim() == 1);
  CHECK(str_algebra(lw02()).dim() == 4);
  CHECK(related_products(sl2()).dim() == 1);
  FinSuperAlg zero = make_algebra("zero", {0, 1}, {}, Sym::Commutative);
  CHECK(related_products(zero).dim() == 0);
  CHECK(is_rigid(zero).degenerate);
}

TEST_CASE("rigidity") {
  CHECK(is_rigid(sl2()).rigid);
  CHECK(is_rigid(sl2()).dim_r == 1);
  CHECK(is_rigid(js02()).rigid);
  FinSuperAlg bad = make_algebra_upper("bad", {0, 0}, {{{0, 0}, {{1, 1}}}, {{0, 1}, {{0, 1}}}},
                                       Sym::Commutative);
  RigidReport r = is_rigid(bad);
  CHECK(r.dim_str == 4);
  CHECK_FALSE(r.rigid);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("simplicity") {
  CHECK(is_simple(js02()).simple);
  CHECK(is_simple(js02()).certified);
  CHECK(is_simple(sl2()).simple);
  FinSuperAlg nil = make_algebra_upper("nil", {0, 0}, {{{0, 0}, {{1, 1}}}}, Sym::Commutative);
  SimpleReport s = is_simple(nil);
  CHECK_FALSE(s.simple);
  CHECK(s.witness == std::vector<SVec>{SVec{{1, 1}}});
  FinSuperAlg two = make_algebra_upper(
      "JS02+JS02", {0, 0, 0, 0},
      {{{0, 0}, {{1, 1}}}, {{1, 1}, {{0, 1}}}, {{2, 2}, {{3, 1}}}, {{3, 3}, {{2, 1}}}}, Sym::Commutative);
  CHECK_FALSE(is_simple(two).simple);
  CHECK_FALSE(is_simple(make_algebra("zero", {0}, {}, Sym::Commutative)).simple);
}

TEST_CASE("parity reversal") {
  FinSuperAlg lw = lw02();
  FinSuperAlg p = parity_reverse(lw);
  CHECK(p.sym == Sym::Commutative);
  CHECK(p.par == std::vector<int>{1, 0});
  CHECK(p.mu_parity == 1);
  // abar*abar = a becomes (-1)^{p(abar)} bar(a): u o u = 0, u o v = v, v o v = -u
  CHECK(p.product(1, 1) == SVec{{0, -1}});
  CHECK(p.product(0, 1) == SVec{{1, 1}});
  FinSuperAlg back = parity_reverse(p);
  CHECK(back.mu.t == scaled(lw.mu.t, -1));
  CHECK(is_rigid(lw).rigid == is_rigid(p).rigid);
  FinSuperAlg zero = make_algebra("zero", {0}, {}, Sym::Commutative);
  CHECK(parity_reverse(zero).par == std::vector<int>{1});
}

TEST_CASE("tkk") {
  FinSuperAlg one = make_algebra("unit", {0}, {{{0, 0}, {{0, 1}}}}, Sym::Commutative);
  GradedLie g1 = tkk(one);
  CHECK(g1.terminated);
  CHECK(g1.dims() == std::vector<int>{1, 1, 1, 0});
  GradedLie g = tkk(js02(), 3);
  CHECK(g.dims() == std::vector<int>{2, 3, 4, 5, 6});
  CHECK_FALSE(g.terminated);
  auto rep = check_admissible_findim(g, js02());
  CHECK(rep.a);
  CHECK(rep.b);
  CHECK(rep.c);
  FinSuperAlg J = js02();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(product_from_tkk(J.space(), J.mu, i, j) == J.product(i, j));
  GradedLie l = tkk(lw02(), 3);
  CHECK(l.dims() == std::vector<int>{2, 4, 4, 4, 4});
  FinSuperAlg zero = make_algebra("zero", {0, 0}, {}, Sym::Commutative);
  CHECK_FALSE(check_admissible_findim(tkk(zero), zero).b);
  auto ls = check_admissible_findim(tkk(sl2(), 2), sl2());
  CHECK((ls.a && ls.b && ls.c));
}
