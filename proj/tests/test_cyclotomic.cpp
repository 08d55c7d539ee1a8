#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spine/cyclotomic.hpp"
#include "spine/error.hpp"
#include "support/random.hpp"

using namespace spine;

TEST_CASE("roots of unity reduce to their conductor") {
  CHECK(Cyclotomic::root_of_unity(Rational(0)) == Cyclotomic(1));
  CHECK(Cyclotomic::root_of_unity(Rational(1, 2)) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(Rational(1, 4)) == Cyclotomic::gaussian(0, 1));
  CHECK(Cyclotomic::root_of_unity(Rational(7, 3)).conductor() == 3);
  CHECK(Cyclotomic::root_of_unity(Rational(1, 6)).conductor() == 3);
  CHECK(phase_conductor(Rational(5, 12)) == 12);
}

TEST_CASE("sum of all n-th roots of unity vanishes") {
  for (int n : {2, 3, 4, 5, 6, 8, 9, 12, 15, 30}) {
    Cyclotomic s;
    for (int k = 0; k < n; ++k) s += Cyclotomic::root_of_unity(Rational(k, n));
    CHECK(s.is_zero());
  }
}

TEST_CASE("exact arithmetic agrees with floating point") {
  testing::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Rational p = rng.rational(-20, 20, {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15});
    Rational q = rng.rational(-20, 20, {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15});
    Rational c = rng.rational(-5, 5, {1, 2, 3});
    auto a = Cyclotomic::root_of_unity(p), b = Cyclotomic::root_of_unity(q);
    CHECK(a * b == Cyclotomic::root_of_unity(p + q));
    CHECK(a * a.conjugate() == Cyclotomic(1));
    auto z = a * Cyclotomic(c) + b;
    auto expect = std::polar(c.get_d(), 2 * M_PI * p.get_d()) + std::polar(1.0, 2 * M_PI * q.get_d());
    CHECK(std::abs(z.to_complex() - expect) < 1e-9);
    CHECK(z - z == Cyclotomic());
  }
}

TEST_CASE("gaussian parts and moduli") {
  auto z = Cyclotomic::gaussian(Rational(3, 5), Rational(4, 5));
  CHECK(z.is_gaussian());
  CHECK(z.real_part() == Rational(3, 5));
  CHECK(z.imag_part() == Rational(4, 5));
  CHECK(z.exact_modulus() == Rational(1));
  CHECK_FALSE(Cyclotomic::gaussian(1, 1).exact_modulus().has_value());
  CHECK(std::abs(Cyclotomic::gaussian(1, 1).modulus() - std::sqrt(2.0)) < 1e-12);
  CHECK(Cyclotomic::root_of_unity(Rational(1, 7)).exact_modulus() == Rational(1));
}

TEST_CASE("canonical coordinates round trip") {
  auto z = Cyclotomic::root_of_unity(Rational(1, 12)) * Cyclotomic(Rational(2, 3)) +
           Cyclotomic::root_of_unity(Rational(1, 5));
  auto back = Cyclotomic::from_coordinates(z.conductor(), z.coordinates());
  CHECK(back == z);
  CHECK_THROWS_AS(Cyclotomic::from_coordinates(6, {Rational(1), Rational(0)}), Error);
}

TEST_CASE("character values fall back to numbers past the exact limit") {
  CharacterValue a(Cyclotomic::root_of_unity(Rational(1, 19997)));
  CharacterValue b(Cyclotomic::root_of_unity(Rational(1, 19993)));
  auto c = a * b;
  CHECK_FALSE(c.is_exact());
  auto expect = std::polar(1.0, 2 * M_PI * (1.0 / 19997 + 1.0 / 19993));
  CHECK(agrees(c, CharacterValue(expect)));
}
