#include "idd/rational.hpp"

#include <doctest.h>

#include <random>

using idd::Rational;

TEST_SUITE("rational") {

TEST_CASE("sums and products reduce") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(0, 1) + Rational(7, 9) == Rational(7, 9));
  CHECK((Rational(1, 3) + Rational(-1, 3)).to_string() == "0");
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(-5, 7) * Rational(1) == Rational(-5, 7));
  CHECK(Rational(4, -6).to_string() == "-2/3");
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(3, 5) / Rational(0), idd::DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), idd::DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), idd::DivisionByZero);
}

TEST_CASE("canonical string form") {
  CHECK(Rational(3).to_string() == "3");
  CHECK(Rational(-5, 2).to_string() == "-5/2");
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("-10") == Rational(-10));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/-2"));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("field axioms and round trip on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    CHECK(Rational::parse(a.to_string()) == a);
    CHECK(a.denominator() > 0);
  }
}

}
