#include <doctest.h>

#include "orthocubic/errors.hpp"
#include "orthocubic/locus_points.hpp"
#include "orthocubic/rational.hpp"

using namespace orthocubic;

TEST_SUITE("rational") {

TEST_CASE("serialization matches the p/q wire format") {
  CHECK(to_string(Rational(27, 35)) == "27/35");
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(0)) == "0");
  // the sign always lands on the numerator
  CHECK(to_string(rational_from_string("3/-9")) == "-1/3");
}

TEST_CASE("parsing integers, fractions and decimals") {
  CHECK(rational_from_string("6") == Rational(6));
  CHECK(rational_from_string("-27/35") == Rational(-27, 35));
  CHECK(rational_from_string("2.5") == Rational(5, 2));
  CHECK(rational_from_string(".25") == Rational(1, 4));
  CHECK(rational_from_string("-1e-3") == Rational(-1, 1000));
  CHECK(rational_from_string("1.5e2") == Rational(150));
  CHECK(rational_from_string("+3/6") == Rational(1, 2));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(rational_from_string("abc"), Error);
  CHECK_THROWS_AS(rational_from_string(""), Error);
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
  CHECK_THROWS_AS(rational_from_string("1.2.3"), Error);
  CHECK_THROWS_AS(rational_from_string("1e"), Error);
}

TEST_CASE("string round trip is exact") {
  SeededRng rng(101);
  for (int i = 0; i < 500; ++i) {
    const Rational r(rng.next_in(-5000, 5000), rng.next_in(1, 997));
    CHECK(rational_from_string(to_string(r)) == r);
  }
}

TEST_CASE("doubles convert exactly") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-0.75) == Rational(-3, 4));
  CHECK(rational_from_double(0.0) == Rational(0));
  SeededRng rng(77);
  for (int i = 0; i < 200; ++i) {
    const double x =
        static_cast<double>(rng.next_in(-1000000, 1000000)) / 8388608.0;
    CHECK(to_double(rational_from_double(x)) == x);
  }
}

TEST_CASE("exact square roots") {
  REQUIRE(exact_sqrt(Rational(9, 4)).has_value());
  CHECK(*exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(*exact_sqrt(Rational(16)) == Rational(4));
  CHECK(*exact_sqrt(Rational(0)) == Rational(0));
  CHECK(!exact_sqrt(Rational(2)).has_value());
  CHECK(!exact_sqrt(Rational(-4)).has_value());
  CHECK(!exact_sqrt(Rational(8, 9)).has_value());
}

}  // TEST_SUITE
