#include <cmath>
#include <limits>

#include "doctest.h"
#include "gbx/errors.hpp"
#include "gbx/rational.hpp"

using gbx::BigInt;
using gbx::Rational;

TEST_CASE("rational normal form") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(4).to_string() == "4");
  CHECK(Rational(BigInt(0), BigInt(-7)).to_string() == "0");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), gbx::Error);
}

TEST_CASE("rational arithmetic") {
  Rational a = Rational(1) / 2, b = Rational(1) / 3;
  CHECK(a + b == Rational(5) / 6);
  CHECK(a - b == Rational(1) / 6);
  CHECK(a * b == Rational(1) / 6);
  CHECK(a / b == Rational(3) / 2);
  CHECK((-a).sign() == -1);
  CHECK(Rational(-5).abs() == 5);
  CHECK((Rational(2) / 3).inverse() == Rational(3) / 2);
  CHECK_THROWS_AS(Rational(0).inverse(), gbx::Error);
  CHECK_THROWS_AS(a / Rational(0), gbx::Error);
  CHECK(b < a);
  CHECK(Rational(18).is_integer());
  CHECK((Rational(18) / 18).is_one());
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("7") == 7);
  CHECK(Rational::parse("-10/4") == Rational(-5) / 2);
  CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("1/0"), gbx::UsageError);
  CHECK_THROWS_AS(Rational::parse("1.5"), gbx::UsageError);
  CHECK_THROWS_AS(Rational::parse(""), gbx::UsageError);
  CHECK_THROWS_AS(Rational::parse("2/-3"), gbx::UsageError);
}

TEST_CASE("to_double is correctly rounded") {
  CHECK((Rational(1) / 3).to_double() == 1.0 / 3.0);
  CHECK((Rational(-1) / 18).to_double() == -1.0 / 18.0);
  CHECK((Rational(3) / 2).to_double() == 1.5);
  // 2^53 + 1 is a tie between 2^53 and 2^53 + 2; round half to even gives 2^53.
  BigInt big = BigInt(1) << 53;
  CHECK(Rational(big + 1, BigInt(1)).to_double() == std::ldexp(1.0, 53));
  CHECK(Rational(big + 3, BigInt(1)).to_double() == std::ldexp(1.0, 53) + 4);
  // Huge numerator and denominator whose quotient is an ordinary number.
  BigInt n = (BigInt(1) << 2000) * 7, d = (BigInt(1) << 2000) * 10;
  CHECK(Rational(n, d).to_double() == 0.7);
}
