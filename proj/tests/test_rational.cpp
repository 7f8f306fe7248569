#include <doctest.h>

#include <random>

#include "genbinom/rational.hpp"

using namespace genbinom;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(0) + Rational(7, 9) == Rational(7, 9));
  CHECK((Rational(1, 12) + Rational(-1, 12)).str() == "0");
  CHECK((Rational(1, 12) + Rational(-1, 12)).denominator() == 1);
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(-5, 7) * Rational(1) == Rational(-5, 7));
  CHECK((Rational(-5, 7) * Rational(0)).is_zero());
  CHECK(Rational(5, 6) / Rational(1, 3) == Rational(5, 2));
  CHECK(Rational(-4, 9) / Rational(-4, 9) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("canonical form") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, -5).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    CHECK(gcd(a.numerator(), a.denominator()) == 1);
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("binom_rational") {
  CHECK(binom_rational(Rational(5), 2) == Rational(10));
  CHECK(binom_rational(Rational(-7, 3), 0) == Rational(1));
  // (-1/2)(-3/2)/2
  CHECK(binom_rational(Rational(-1, 2), 2) == Rational(3, 8));
  for (long n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binom_rational(Rational(n), k) == Rational(binom_integer(n, k)));
  // Zero exactly at the integers 0..k-1.
  for (int k = 1; k <= 8; ++k)
    for (long z = -3; z <= 12; ++z)
      CHECK(binom_rational(Rational(z), k).is_zero() == (z >= 0 && z < k));
  CHECK_FALSE(binom_rational(Rational(1, 2), 3).is_zero());
}

TEST_CASE("rational json") {
  nlohmann::json j = Rational(-3, 8);
  CHECK(j.dump() == R"(["-3","8"])");
  CHECK(j.get<Rational>() == Rational(-3, 8));
  // Big integers survive as strings.
  const Rational big(factorial(40));
  CHECK(nlohmann::json(big).get<Rational>() == big);
  CHECK_THROWS(nlohmann::json::parse(R"(["1","-2"])").get<Rational>());
}
