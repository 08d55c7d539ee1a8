#include <catch2/catch_amalgamated.hpp>

#include "spine/affine.hpp"
#include "spine/dsl.hpp"
#include "spine/error.hpp"
#include "support/random.hpp"

using namespace spine;

namespace {

Model const r2 = Model::vector(ModelKind::real_vector, 2);

SpineElement point(Model const& m, RationalVector x) { return SpineElement(m, top_grade(m), x); }

}  // namespace

TEST_CASE("identity pulls the unit back to the unit") {
  AffineMap id({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}, {Rational(0), Rational(0)});
  CHECK(affine_pullback(id, GradedElement::unit(r2)) ==
        GradedElement::unit(Model::vector(ModelKind::integer_vector, 2)));
}

TEST_CASE("doubling on Z -> R") {
  auto r = Model::of(ModelKind::real_line);
  AffineMap twice({{Rational(2)}}, {Rational(0)});
  auto u = GradedElement::single(r, top_grade(r),
                                 TrigPolynomial::character(frequency_domain(r), {Rational(1, 4)}));
  auto pulled = affine_pullback(twice, u);
  auto z = Model::of(ModelKind::integers);
  CHECK(pulled == GradedElement::single(z, top_grade(z),
                                        TrigPolynomial::character(frequency_domain(z), {Rational(1, 2)})));
  for (long h = 0; h < 8; ++h) {
    CHECK(agrees(char_eval(point(z, {Rational(h)}), pulled),
                 char_eval(point(r, {Rational(2 * h)}), u)));
  }
}

TEST_CASE("offsets become phases") {
  auto r = Model::of(ModelKind::real_line);
  AffineMap shift({{Rational(1)}}, {Rational(1, 3)});
  auto u = GradedElement::single(r, unit_grade(r),
                                 TrigPolynomial::character(frequency_domain(r), {Rational(1, 2)}));
  auto pulled = affine_pullback(shift, u);
  auto const& terms = pulled.parts().begin()->second.terms();
  REQUIRE(terms.size() == 1);
  CHECK(terms.begin()->second == Cyclotomic::root_of_unity(Rational(1, 6)));
}

TEST_CASE("grades pull back to preimages") {
  AffineMap diag({{Rational(1)}, {Rational(1)}}, {Rational(0), Rational(0)});
  CHECK(pullback_grade(diag, r2, parse_grade(r2, "span[[1,0]]")) ==
        TopologyGrade(VectorGrade{RationalSubspace::zero(1)}));
  CHECK(pullback_grade(diag, r2, parse_grade(r2, "span[[1,1]]")) ==
        TopologyGrade(VectorGrade{RationalSubspace::full(1)}));
  AffineMap a({{Rational(1), Rational(2)}, {Rational(0), Rational(0)}}, {Rational(0), Rational(0)});
  auto g = pullback_grade(a, r2, unit_grade(r2));
  CHECK(to_string(g) == "span[[1,-1/2]]");
}

TEST_CASE("evaluation identity and products on random maps") {
  testing::Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    Matrix a{rng.vector(2, -3, 3, testing::kPointDens), rng.vector(2, -3, 3, testing::kPointDens)};
    AffineMap alpha(a, rng.vector(2, -3, 3, testing::kPointDens));
    auto u = testing::random_graded(rng, r2, 3, 4), v = testing::random_graded(rng, r2, 3, 4);
    auto pu = affine_pullback(alpha, u);
    auto src = pu.model();
    for (long x = -2; x <= 2; ++x) {
      for (long y = -2; y <= 2; ++y) {
        RationalVector h{Rational(x), Rational(y)};
        CHECK(agrees(char_eval(point(src, h), pu), char_eval(point(r2, alpha(h)), u)));
      }
    }
    CHECK(affine_pullback(alpha, graded_mul(u, v)).flatten() ==
          graded_mul(pu, affine_pullback(alpha, v)).flatten());
  }
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(AffineMap({{Rational(1)}}, {Rational(0), Rational(0)}), Error);
  CHECK_THROWS_AS(AffineMap({{Rational(1), Rational(2)}, {Rational(1)}}, {Rational(0), Rational(0)}),
                  Error);
  AffineMap a({{Rational(1)}}, {Rational(0)});
  CHECK_THROWS_AS(affine_pullback(a, GradedElement::unit(r2)), Error);
  CHECK_THROWS_AS(affine_pullback(a, GradedElement::unit(Model::of(ModelKind::integers))), Error);
}
