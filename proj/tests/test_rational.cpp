#include <doctest.h>

#include <random>

#include "gwstack/linalg.hpp"
#include "gwstack/rational.hpp"

using gwstack::Rat;

TEST_CASE("rationals are kept in lowest terms") {
  const Rat r(-2, 18);
  CHECK(r.str() == "-1/9");
  CHECK(Rat(4, -8).str() == "-1/2");
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(620).str() == "620");
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("canonical parsing rejects non-reduced forms") {
  CHECK(Rat::parse_canonical("-1/9") == Rat(-1, 9));
  CHECK(Rat::parse_canonical("5663/5038848") == Rat(5663, 5038848));
  CHECK(Rat::parse_canonical("0") == Rat(0));
  CHECK(Rat::parse_canonical("12") == Rat(12));
  CHECK_FALSE(Rat::parse_canonical("-2/18"));
  CHECK_FALSE(Rat::parse_canonical("0/5"));
  CHECK_FALSE(Rat::parse_canonical("3/1"));
  CHECK_FALSE(Rat::parse_canonical("-0"));
  CHECK_FALSE(Rat::parse_canonical("1/0"));
  CHECK_FALSE(Rat::parse_canonical("1/-3"));
  CHECK_FALSE(Rat::parse_canonical("+1/3"));
  CHECK_FALSE(Rat::parse_canonical("0.5"));
  CHECK_FALSE(Rat::parse_canonical(""));
  CHECK(Rat::parse("2/4") == Rat(1, 2));
  CHECK_FALSE(Rat::parse("x"));
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
  CHECK(gwstack::pow(Rat(1, 6), 3) == Rat(1, 216));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK(Rat(7).to_int64() == 7);
  CHECK_THROWS(Rat(7, 2).to_int64());
}

TEST_CASE("render and canonical parse are inverse on random values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    const Rat r(num(rng), den(rng));
    REQUIRE(Rat::parse_canonical(r.str()) == r);
  }
}

TEST_CASE("matrix inverse and echelon span") {
  using gwstack::RatMatrix;
  RatMatrix m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  auto inv = gwstack::inverse(m);
  REQUIRE(inv);
  CHECK(*inv == m);

  RatMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  CHECK_FALSE(gwstack::inverse(singular));

  gwstack::EchelonSpan span(3);
  CHECK(span.insert({1, 2, 0}));
  CHECK(span.insert({0, 1, 1}));
  CHECK_FALSE(span.insert({1, 3, 1}));
  CHECK(span.contains({2, 5, 1}));
  CHECK_FALSE(span.contains({0, 0, 1}));
  CHECK(span.rank() == 2);
}
