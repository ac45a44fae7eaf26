#include <limits>

#include "doctest.h"
#include "mgnet/rational.hpp"

using mgnet::Rational;

TEST_CASE("rational normalizes sign and gcd") {
  Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational arithmetic agrees with cross-multiplication") {
  for (int a = -6; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int c = -6; c <= 6; ++c)
        for (int d = 1; d <= 6; ++d) {
          Rational x(a, b), y(c, d);
          CHECK((x + y) == Rational(a * d + c * b, b * d));
          CHECK((x - y) == Rational(a * d - c * b, b * d));
          CHECK((x * y) == Rational(a * c, b * d));
          if (c != 0) CHECK((x / y) == Rational(a * d, b * c));
          CHECK((x < y) == (a * d < c * b));
        }
}

TEST_CASE("rational overflow is reported") {
  Rational big(std::numeric_limits<int64_t>::max());
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
}

TEST_CASE("rational text forms") {
  CHECK(Rational(21, 8).str() == "21/8");
  CHECK(Rational(-3).str() == "-3");
  CHECK(Rational(21, 8).decimal() == "2.625");
  CHECK(Rational(1, 3).decimal() == "0.333333333333");
  CHECK(Rational(61, 25).decimal() == "2.44");
  CHECK(Rational(1, 3).has_finite_decimal() == false);
  CHECK(Rational(7, 40).has_finite_decimal());
  CHECK(Rational::parse("9/8") == Rational(9, 8));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK(Rational::parse("4") == Rational(4));
  CHECK_THROWS(Rational::parse("x/2"));
  CHECK_THROWS(Rational::parse("1/0"));
  for (int n = -20; n <= 20; ++n)
    for (int d : {1, 2, 4, 5, 8, 16, 25, 40}) {
      Rational r(n, d);
      CHECK(Rational::parse(r.str()) == r);
      CHECK(Rational::parse(r.decimal()) == r);
    }
}
