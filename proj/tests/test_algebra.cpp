#include "idd/algebra.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace idd;

TEST_SUITE("algebra") {

TEST_CASE("op_coeff values") {
  CHECK(op_coeff(3, 1) == Rational(3));
  CHECK(op_coeff(3, 2) == Rational(6));
  CHECK(op_coeff(0, 1) == Rational(0));
  CHECK(op_coeff(2, -1) == Rational(1, 3));
  CHECK(op_coeff(4, -2) == Rational(1, 30));
  CHECK(op_coeff(7, 0) == Rational(1));
  CHECK(op_coeff(2, 3) == Rational(0));
}

TEST_CASE("op_coeff matches the factorial form") {
  for (int i = 0; i <= 12; ++i)
    for (int m = -4; m <= 4; ++m) CHECK(op_coeff(i, m) == oracle::factorial_ratio(i, m));
}

TEST_CASE("op_coeff composes like T^a T^b") {
  for (int i = 0; i <= 12; ++i)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        CHECK(op_coeff(i, a + b) == op_coeff(i, a) * (i - a >= 0 ? op_coeff(i - a, b) : Rational(0)));
        CHECK(op_coeff(i, -a - b) == op_coeff(i, -a) * op_coeff(i + a, -b));
      }
}

TEST_CASE("spec grammar") {
  const AlgebraSpec s = AlgebraSpec::parse("K0:8:1,0");
  CHECK(s.is_finite());
  CHECK(s.k() == 0);
  CHECK(s.top() == 8);
  CHECK(s.dim() == 9);
  const AlgebraSpec w = AlgebraSpec::parse("K1:inf@40:-1,-1");
  CHECK(w.is_window());
  CHECK(w.top() == 40);
  CHECK(w.m1() == -1);
  CHECK(w.to_string() == "K1:inf@40:-1,-1");
  for (const char* bad : {"BADSPEC", "K0:8:1", "K0:8:1,0x", "K3:2:0,0", "K-1:4:0,0", "K0:inf@:1,0", ""})
    CHECK_THROWS_AS(AlgebraSpec::parse(bad), SpecParseError);
  try {
    AlgebraSpec::parse("K0:x:1,0");
  } catch (const SpecParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("rank and level") {
  CHECK(AlgebraSpec::finite(0, 4, 1, -1).rank() == 2);
  CHECK(AlgebraSpec::finite(0, 4, 1, -1).level() == 0);
  CHECK(AlgebraSpec::finite(0, 4, 0, 0).rank() == 0);
  CHECK(AlgebraSpec::finite(0, 4, -1, -1).rank() == 2);
  CHECK(AlgebraSpec::finite(0, 4, -1, -1).level() == -2);
}

TEST_CASE("table entries") {
  const StructureTable a(AlgebraSpec::parse("K0:5:1,0"));
  CHECK(a.coeff(2, 3) == Rational(2));
  CHECK(a.product(2, 3).target == 4);
  const StructureTable b(AlgebraSpec::parse("K1:4:1,-1"));
  CHECK(b.coeff(2, 1) == Rational(1));
  CHECK(b.product(2, 1).target == 3);
  const StructureTable c(AlgebraSpec::parse("K0:3:0,0"));
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) CHECK(c.coeff(i, j) == Rational(i + j <= 3 ? 1 : 0));
}

TEST_CASE("table matches the factorial formula with its index ranges") {
  for (int k = 0; k <= 2; ++k)
    for (int m1 = -3; m1 <= 3; ++m1)
      for (int m2 = -3; m2 <= 3; ++m2) {
        const int n = 7, l = m1 + m2;
        const StructureTable t(AlgebraSpec::finite(k, n, m1, m2));
        for (int i = k; i <= n; ++i)
          for (int j = k; j <= n; ++j) {
            const bool in = i >= std::max(k, m1) && j >= std::max(k, m2) && i + j >= std::max(k, k + l) &&
                            i + j <= n + l;
            const Rational want = in ? oracle::factorial_ratio(i, m1) * oracle::factorial_ratio(j, m2) : Rational(0);
            CHECK(t.coeff(i, j) == want);
          }
      }
}

TEST_CASE("multiply") {
  const StructureTable t(AlgebraSpec::parse("K0:5:1,0"));
  const Element x = Element::basis(2) + Element::basis(3);
  CHECK(t.multiply(x, Element::basis(1)) == Element::basis(2, 2) + Element::basis(3, 3));
  CHECK(t.multiply(Element(), x).is_zero());
  const StructureTable s(AlgebraSpec::parse("K0:3:1,0"));
  CHECK(s.multiply(Element::basis(3), Element::basis(3)).is_zero());
}

TEST_CASE("window products leaving the window are flagged") {
  const StructureTable w(AlgebraSpec::parse("K0:inf@6:0,0"));
  CHECK(w.out_of_window(4, 3));
  CHECK_FALSE(w.out_of_window(3, 3));
  CHECK_THROWS_AS(w.multiply(Element::basis(4), Element::basis(3)), OutOfWindow);
  CHECK_FALSE(w.try_multiply(Element::basis(4), Element::basis(3)).has_value());
  CHECK(w.try_multiply(Element::basis(2), Element::basis(3)) == Element::basis(5));
  const StructureTable f(AlgebraSpec::parse("K0:6:0,0"));
  CHECK(f.multiply(Element::basis(4), Element::basis(3)).is_zero());
}

TEST_CASE("opposite algebra") {
  CHECK(opposite_table(build_table(AlgebraSpec::parse("K0:4:1,0"))) == build_table(AlgebraSpec::parse("K0:4:0,1")));
  const StructureTable c = build_table(AlgebraSpec::parse("K0:4:1,1"));
  CHECK(opposite_table(c) == c);
  CHECK(opposite_table(build_table(AlgebraSpec::parse("K1:5:1,-1"))) ==
        build_table(AlgebraSpec::parse("K1:5:-1,1")));
}

TEST_CASE("commutative exactly when m1 = m2") {
  for (int m1 = -3; m1 <= 3; ++m1)
    for (int m2 = -3; m2 <= 3; ++m2) {
      const StructureTable t(AlgebraSpec::finite(0, 6, m1, m2));
      bool symmetric = true;
      for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) symmetric = symmetric && t.coeff(i, j) == t.coeff(j, i);
      CHECK(symmetric == (m1 == m2));
    }
}

TEST_CASE("multiplicative bases") {
  const StructureTable t(AlgebraSpec::parse("K0:6:1,0"));
  CHECK(is_multiplicative_basis(t));
  CHECK_FALSE(is_strong_multiplicative(t));
  CHECK(is_strong_multiplicative(build_table(AlgebraSpec::parse("K2:inf@20:1,0"))));
}

TEST_CASE("bilinearity on random elements") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-6, 6);
  for (const char* text : {"K0:6:1,0", "K1:6:-1,-1", "K0:inf@9:2,-1"}) {
    const StructureTable t(AlgebraSpec::parse(text));
    auto draw = [&](int lo, int hi) {
      Element e;
      for (int i = lo; i <= hi; ++i) e.add(i, Rational(c(rng), 1 + (c(rng) & 3)));
      return e;
    };
    for (int trial = 0; trial < 30; ++trial) {
      const int half = t.k() + (t.top() - t.k()) / 2;
      const Element x = draw(t.k(), half - 1), y = draw(t.k(), half - 1), z = draw(t.k(), half - 1);
      const Rational a(c(rng)), b(c(rng), 5);
      CHECK(t.multiply(a * x + b * y, z) == a * t.multiply(x, z) + b * t.multiply(y, z));
      CHECK(t.multiply(z, a * x + b * y) == a * t.multiply(z, x) + b * t.multiply(z, y));
    }
  }
}

}
