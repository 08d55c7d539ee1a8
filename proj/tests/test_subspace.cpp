#include <catch2/catch_amalgamated.hpp>

#include "oracle/linear.hpp"
#include "spine/error.hpp"
#include "spine/linalg.hpp"
#include "spine/subspace.hpp"
#include "support/random.hpp"

using namespace spine;

namespace {

RationalSubspace span(std::size_t n, std::vector<std::vector<int>> rows) {
  Matrix m;
  for (auto const& r : rows) {
    RationalVector v;
    for (int x : r) v.emplace_back(x);
    m.push_back(v);
  }
  return RationalSubspace(n, m);
}

}  // namespace

TEST_CASE("rref is canonical") {
  auto a = span(3, {{2, 4, 0}, {1, 2, 1}});
  auto b = span(3, {{1, 2, 0}, {0, 0, 3}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(to_string(a) == "span[[1,2,0],[0,0,1]]");
  CHECK(to_string(RationalSubspace::zero(2)) == "span[]");
}

TEST_CASE("subspace sums") {
  CHECK(subspace_sum(span(2, {{1, 0}}), span(2, {{0, 1}})) == RationalSubspace::full(2));
  auto l = span(3, {{1, 2, 3}});
  CHECK(subspace_sum(l, l) == l);
  CHECK(subspace_sum(span(3, {{1, 1, 0}}), span(3, {{1, -1, 0}})) ==
        span(3, {{1, 0, 0}, {0, 1, 0}}));
  CHECK_THROWS_AS(subspace_sum(span(2, {{1, 0}}), span(3, {{1, 0, 0}})), Error);
}

TEST_CASE("subspace intersections") {
  CHECK(subspace_intersect(RationalSubspace::full(2), span(2, {{1, 1}})) == span(2, {{1, 1}}));
  CHECK(subspace_intersect(span(2, {{1, 1}}), RationalSubspace::zero(2)).is_zero());
  CHECK_THROWS_AS(subspace_intersect(span(2, {{1, 0}}), span(3, {{1, 0, 0}})), Error);
}

TEST_CASE("modular law and oracle agreement in Q^4") {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto gl = testing::random_generators(rng, 4), gm = testing::random_generators(rng, 4);
    RationalSubspace l(4, gl), m(4, gm);
    auto s = subspace_sum(l, m), x = subspace_intersect(l, m);
    CHECK(l.dim() + m.dim() == s.dim() + x.dim());
    auto both = gl;
    both.insert(both.end(), gm.begin(), gm.end());
    CHECK(oracle::same_span(s.basis(), both, 4));
    CHECK(oracle::same_span(x.basis(), oracle::intersection(gl, gm, 4), 4));
  }
}

TEST_CASE("complements and containment") {
  auto l = span(3, {{1, 1, 0}});
  auto c = l.orthogonal_complement();
  CHECK(c.dim() == 2);
  for (auto const& v : c.basis()) CHECK(dot(v, l.basis()[0]) == 0);
  CHECK(l.is_subspace_of(subspace_sum(l, c)));
  CHECK(l.contains({Rational(3), Rational(3), Rational(0)}));
  CHECK_FALSE(l.contains({Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("preimage under a linear map") {
  // A = (1 1)ᵀ: ℚ → ℚ², preimage of span{e1} is {0}, of the diagonal is ℚ.
  Matrix a{{Rational(1)}, {Rational(1)}};
  CHECK(preimage(a, 1, span(2, {{1, 0}})).is_zero());
  CHECK(preimage(a, 1, span(2, {{1, 1}})).is_full());
}

TEST_CASE("kernel and rank") {
  Matrix m{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
  CHECK(rank(m, 3) == 1);
  auto k = kernel(m, 3);
  CHECK(k.size() == 2);
  for (auto const& v : k) CHECK(dot(m[0], v) == 0);
}
