#include <doctest.h>

#include <sstream>

#include "surreal/dyadic.hpp"
#include "surreal/error.hpp"

using namespace surreal;

TEST_SUITE("dyadic") {

TEST_CASE("normalizes to lowest terms") {
  Dyadic q(6, 2);  // 6/4
  CHECK(q.numerator() == 3);
  CHECK(q.exponent() == 1);
  CHECK(Dyadic(8, 3) == Dyadic(1));
  CHECK(Dyadic(0, 5).exponent() == 0);
  CHECK(Dyadic(-12, 4) == Dyadic(-3, 2));
}

TEST_CASE("arithmetic is exact") {
  CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));
  CHECK(Dyadic(3, 2) - Dyadic(3, 2) == Dyadic(0));
  CHECK(Dyadic(3, 2) * Dyadic(-5, 3) == Dyadic(-15, 5));
  CHECK(Dyadic::midpoint(Dyadic(1), Dyadic(2)) == Dyadic(3, 1));
  CHECK(-Dyadic(5, 3) == Dyadic(-5, 3));
  Integer big = Integer(1) << 200;
  CHECK((Dyadic(big, 0) + Dyadic(1, 100)).exponent() == 100);
}

TEST_CASE("ceil and floor use integer division") {
  CHECK(Dyadic(5, 3).ceil() == 1);
  CHECK(Dyadic(-5, 3).ceil() == 0);
  CHECK(Dyadic(-5, 3).floor() == -1);
  CHECK(Dyadic(7, 1).floor() == 3);
  CHECK(Dyadic(-7, 1).ceil() == -3);
  CHECK(Dyadic(4).ceil() == 4);
}

TEST_CASE("ordering") {
  CHECK(Dyadic(3, 2) < Dyadic(1));
  CHECK(Dyadic(-1, 1) < Dyadic(0));
  CHECK(Dyadic(1, 1) > Dyadic(1, 2));
  CHECK(Dyadic(-3, 2) > Dyadic(-1));
}

TEST_CASE("text") {
  CHECK(Dyadic(3, 2).to_string() == "3/4");
  CHECK(Dyadic(-5).to_string() == "-5");
  CHECK(Dyadic::parse("3/4") == Dyadic(3, 2));
  CHECK(Dyadic::parse("-5/2^3") == Dyadic(-5, 3));
  CHECK(Dyadic::parse("6/8") == Dyadic(3, 2));
  CHECK(Dyadic::parse("7") == Dyadic(7));
  CHECK(Dyadic::parse("-0") == Dyadic(0));
  CHECK_THROWS_AS(Dyadic::parse("1/3"), NonDyadicDenominator);
  CHECK_THROWS_AS(Dyadic::parse("1/0"), NonDyadicDenominator);
  CHECK_THROWS_AS(Dyadic::parse("x"), SyntaxError);
  CHECK_THROWS_AS(Dyadic::parse("1/"), SyntaxError);
  std::ostringstream os;
  os << Dyadic(-1, 1);
  CHECK(os.str() == "-1/2");
}

TEST_CASE("canonical_birthday") {
  CHECK(canonical_birthday(Dyadic(0)) == 0);
  CHECK(canonical_birthday(Dyadic(1, 1)) == 2);
  CHECK(canonical_birthday(Dyadic(2)) == 2);
  CHECK(canonical_birthday(Dyadic(-5, 3)) == 4);
  CHECK(canonical_birthday(Dyadic(3, 2)) == 3);
  CHECK(canonical_birthday(Dyadic(-17, 2)) == 5 + 2);
}

}
