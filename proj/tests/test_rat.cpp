#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isoadd/rat.hpp"

using namespace isoadd;

TEST_CASE("canonical form: lowest terms, positive denominator, unique zero") {
  CHECK(Rat(2, -4).str() == "-1/2");
  CHECK(Rat(-6, -4).str() == "3/2");
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(0, -7) == Rat(0));
  CHECK(Rat(42, 6) == Rat(7));
  CHECK(Rat(42, 6).den() == 1);
}

TEST_CASE("parse and round trip") {
  CHECK(Rat::parse("30") == Rat(30));
  CHECK(Rat::parse("-3/6") == Rat(-1, 2));
  CHECK(Rat::parse("+7/2") == Rat(7, 2));
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
  CHECK_THROWS_AS(Rat::parse("x"), Error);
  CHECK_THROWS_AS(Rat::parse("3/4x"), Error);
  CHECK_THROWS_AS(Rat::parse(""), Error);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-10000, 10000);
  std::uniform_int_distribution<long long> den(1, 997);
  for (int i = 0; i < 500; ++i) {
    Rat r(num(rng), den(rng));
    CHECK(Rat::parse(r.str()) == r);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.num()),
                                     r.den()) == 1);
    CHECK(r.den() > 0);
  }
}

TEST_CASE("exact arithmetic properties") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(-500, 500);
  std::uniform_int_distribution<long long> den(1, 60);
  for (int i = 0; i < 500; ++i) {
    Rat a(num(rng), den(rng));
    Rat b(num(rng), den(rng));
    Rat c(num(rng), den(rng));
    CHECK(a + (-a) == Rat(0));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
}

TEST_CASE("total order by value") {
  CHECK(Rat(-10) < Rat(-3));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(7, 2) > Rat(3));
}

TEST_CASE("height is max(|num|, den)") {
  CHECK(Rat(3, 2).height() == 3);
  CHECK(Rat(-2, 5).height() == 5);
  CHECK(Rat(0).height() == 1);
  CHECK(Rat(100).height() == 100);
}

TEST_CASE("sqrt_exact") {
  CHECK(*sqrt_exact(Rat(9, 4)) == Rat(3, 2));
  CHECK(*sqrt_exact(Rat(0)) == Rat(0));
  // discriminant value for the pair (30, 42) probed at x = 3:
  // 4*42*(42-30) + 3^2 = 2025 = 45^2
  CHECK(*sqrt_exact(Rat(2025)) == Rat(45));
  CHECK(!sqrt_exact(Rat(2)).has_value());
  CHECK(!sqrt_exact(Rat(-9)).has_value());
  CHECK(!sqrt_exact(Rat(9, 8)).has_value());

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> num(-300, 300);
  std::uniform_int_distribution<long long> den(1, 40);
  for (int i = 0; i < 500; ++i) {
    Rat r(num(rng), den(rng));
    Rat sq = r.squared();
    auto root = sqrt_exact(sq);
    REQUIRE(root.has_value());
    CHECK(*root == r.abs());
  }
}

TEST_CASE("perfect_square_root on integers") {
  CHECK(*perfect_square_root(Int(0)) == 0);
  CHECK(*perfect_square_root(Int(1)) == 1);
  CHECK(!perfect_square_root(Int(-4)).has_value());
  Int big("123456789123456789");
  CHECK(*perfect_square_root(big * big) == big);
  CHECK(!perfect_square_root(big * big + 1).has_value());
}
