#include "doctest.h"
#include "minsing/error.hpp"
#include "minsing/rat.hpp"

using namespace minsing;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(0).str() == "0");
  CHECK(Rat(-5, 15).str() == "-1/3");
  CHECK(Rat(7, 1).str() == "7");
}

TEST_CASE("rational arithmetic and comparisons") {
  Rat a(1, 2), b(1, 3);
  CHECK(a + b == Rat(5, 6));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 6));
  CHECK(a / b == Rat(3, 2));
  CHECK(a > b);
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK_THROWS_AS(a / Rat(0), Error);
  CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK(Rat(-7, 2).floor() == -4);
}

TEST_CASE("parsing") {
  CHECK(*Rat::parse("22/7") == Rat(22, 7));
  CHECK(*Rat::parse("-3") == Rat(-3));
  CHECK(!Rat::parse("1/0").has_value());
  CHECK(!Rat::parse("x").has_value());
}

TEST_CASE("exact roots") {
  CHECK(*rat_root(Rat(4, 9), 2) == Rat(2, 3));
  CHECK(*rat_root(Rat(-8, 27), 3) == Rat(-2, 3));
  CHECK(!rat_root(Rat(2), 2).has_value());
  CHECK(!rat_root(Rat(-4), 2).has_value());
  CHECK(*rat_root(Rat(1), 5) == Rat(1));
}

TEST_CASE("extended rationals order with infinity on top") {
  ExtRat inf = ExtRat::infinity();
  CHECK(ExtRat(Rat(3)) < inf);
  CHECK(!(inf < inf));
  CHECK(inf == ExtRat::infinity());
  CHECK(ExtRat(Rat(1, 2)) < ExtRat(Rat(2, 3)));
  CHECK(inf.str() == "inf");
  CHECK_THROWS_AS(inf.finite(), Error);
}
