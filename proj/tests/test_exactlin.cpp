#include "doctest.h"
#include "superrigid/exactlin.hpp"

using namespace superrigid;

TEST_CASE("span_reduce small cases") {
  CHECK(span_reduce({{1, 0}, {2, 0}}).dim() == 1);
  CHECK(span_reduce(std::vector<DVec>{}).dim() == 0);
  CHECK(span_reduce({{1, 1}, {1, -1}}).dim() == 2);
  CHECK_THROWS(span_reduce({{1, 0}, {1, 0, 0}}));
}

TEST_CASE("subspace_contains") {
  Subspace s = span_reduce({{1, 0}});
  CHECK(subspace_contains(s, DVec{3, 0}));
  CHECK_FALSE(subspace_contains(s, DVec{0, 1}));
  Subspace z = span_reduce(2, {});
  CHECK(subspace_contains(z, DVec{0, 0}));
}

TEST_CASE("subspaces compare canonically") {
  Subspace a = span_reduce({{1, 2, 0}, {0, 1, 1}});
  Subspace b = span_reduce({{1, 3, 1}, {2, 5, 1}});
  CHECK(a == b);
  CHECK(is_subspace_of(span_reduce({{1, 3, 1}}), a));
  CHECK(subspace_sum(a, span_reduce({{0, 0, 1}})).dim() == 3);
}

TEST_CASE("closure_under") {
  Subspace seed = span_reduce({{1, 0}});
  Bilinear ident = [](const SVec& x, const SVec&) { return x; };
  CHECK(closure_under(seed, {ident}, span_reduce({{1, 1}})) == seed);
  Bilinear swap = [](const SVec& x, const SVec&) {
    SVec out;
    for (auto [i, c] : x) out.emplace_back(1 - i, c);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
  };
  CHECK(closure_under(seed, {swap}, span_reduce({{1, 0}})).dim() == 2);
}

TEST_CASE("kernel_basis and lie_closure") {
  auto k = kernel_basis(3, {SVec{{0, 1}, {1, 1}}});
  CHECK(k.size() == 2);
  // 2x2 matrices as 4-vectors; commutator closure of e12, e21 is sl2
  Bilinear comm = [](const SVec& a, const SVec& b) {
    DVec A = to_dense(a, 4), B = to_dense(b, 4), C(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l)
          C[2 * i + j] += A[2 * i + l] * B[2 * l + j] - B[2 * i + l] * A[2 * l + j];
    return to_sparse(C);
  };
  CHECK(lie_closure(4, {SVec{{1, 1}}, SVec{{2, 1}}}, comm).dim() == 3);
}
