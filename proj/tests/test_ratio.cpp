#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratde/equation.hpp"
#include "ratde/random_ics.hpp"
#include "ratde/ratio.hpp"

using namespace ratde;

TEST_CASE("parse and format round-trip") {
  CHECK(Ratio::parse("3/4").str() == "3/4");
  CHECK(Ratio::parse("7").str() == "7");
  CHECK(Ratio::parse("-2/6").str() == "-1/3");
  CHECK(Ratio::parse(" 10/4 ").str() == "5/2");
  CHECK(Ratio::parse("0").str() == "0");
  CHECK(Ratio::parse("0/5") == Ratio(0));
  for (const char* s : {"3/4", "-17", "22/7", "0"}) {
    Ratio r = Ratio::parse(s);
    CHECK(Ratio::parse(r.str()) == r);
  }
}

TEST_CASE("parse rejects junk") {
  CHECK_THROWS_AS(Ratio::parse(""), ParseError);
  CHECK_THROWS_AS(Ratio::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Ratio::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Ratio::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Ratio::parse("1/"), ParseError);
  CHECK_THROWS_AS(Ratio::parse("/2"), ParseError);
}

TEST_CASE("arithmetic is exact and guarded") {
  Ratio a(1, 3), b(1, 6);
  CHECK(a + b == Ratio(1, 2));
  CHECK(a - b == Ratio(1, 6));
  CHECK(a * b == Ratio(1, 18));
  CHECK(a / b == Ratio(2));
  CHECK_THROWS_AS(a / Ratio(0), DivisionByZero);
  CHECK_THROWS_AS(Ratio(1, 0), DivisionByZero);
}

TEST_CASE("lowest terms and positive denominator") {
  Ratio r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r == Ratio(-3, 2));
}

TEST_CASE("perfect square detection") {
  Ratio root;
  CHECK(Ratio(9, 4).perfect_square(&root));
  CHECK(root == Ratio(3, 2));
  CHECK_FALSE(Ratio(2).perfect_square());
  CHECK_FALSE(Ratio(-4).perfect_square());
  CHECK(Ratio(0).perfect_square(&root));
  CHECK(root == Ratio(0));
}

TEST_CASE("dyadic rounding stays close and small") {
  Ratio x(123456789L, 987654321L);
  Ratio rounded = x.dyadic_round(64);
  CHECK((x - rounded).abs() <= Ratio(1, 2) / Ratio(mpq_class(mpz_class(1) << 64)));
  CHECK(rounded.bit_size() <= 70);
}

TEST_CASE("mediant bounds: worked examples") {
  auto [lo1, hi1] = mediant_bounds(Ratio(1), Ratio(1), Ratio(1), Ratio(1));
  CHECK(lo1 == Ratio(1));
  CHECK(hi1 == Ratio(1));

  auto [lo2, hi2] = mediant_bounds(Ratio(1), Ratio(3), Ratio(2), Ratio(4));
  CHECK(lo2 == Ratio(1, 2));
  CHECK(hi2 == Ratio(3, 4));
  Ratio mediant = Ratio(1 + 3) / Ratio(2 + 4);
  CHECK(mediant == Ratio(2, 3));
  CHECK(lo2 <= mediant);
  CHECK(mediant <= hi2);

  auto [lo3, hi3] = mediant_bounds(Ratio(0), Ratio(5), Ratio(3), Ratio(7));
  CHECK(lo3 == Ratio(0));
  CHECK(hi3 == Ratio(5, 7));
  CHECK(Ratio(5, 10) <= hi3);
}

TEST_CASE("mediant inequality holds exactly on 10^4 random quadruples") {
  RationalSampler nums(99001, 0, 40, 1, 23);
  RationalSampler dens(99002, 1, 40, 1, 23);
  for (int i = 0; i < 10000; ++i) {
    Ratio a = nums.next(), b = nums.next();
    Ratio c = dens.next(), d = dens.next();
    auto [lo, hi] = mediant_bounds(a, b, c, d);
    Ratio med = (a + b) / (c + d);
    CHECK(lo <= med);
    CHECK(med <= hi);
    CHECK(lo == ratde::min(a / c, b / d));
    CHECK(hi == ratde::max(a / c, b / d));
  }
}
