#include <doctest.h>

#include <cstdint>
#include <functional>

#include "hnstrata/arith.hpp"

using namespace hnstrata;

TEST_SUITE("arith") {

TEST_CASE("residue examples") {
  CHECK(residue(0, 5) == 5);
  CHECK(residue(7, 3) == 1);
  CHECK(residue(-2, 5) == 3);
  CHECK(residue(12, 4) == 4);
  CHECK_THROWS_AS(residue(3, 0), error);
  CHECK_THROWS_AS(residue(3, -2), error);
  try {
    residue(1, 0);
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_modulus);
  }
}

TEST_CASE("residue properties") {
  for (i64 n = 1; n <= 13; ++n) {
    for (i64 r = -60; r <= 60; ++r) {
      const i64 v = residue(r, n);
      CHECK(v >= 1);
      CHECK(v <= n);
      CHECK(((v - r) % n) == 0);
      CHECK(residue(r + n, n) == v);
    }
  }
}

TEST_CASE("ceil_strict examples") {
  CHECK(ceil_strict(Rational(1, 3)) == 1);
  CHECK(ceil_strict(Rational(2)) == 3);
  CHECK(ceil_strict(Rational(-3, 2)) == -1);
  CHECK(ceil_strict(Rational(0)) == 1);
  CHECK(ceil_strict(Rational(-7, 3)) == -2);
}

TEST_CASE("ceil_strict sandwich property") {
  for (i64 num = -40; num <= 40; ++num) {
    for (i64 den = 1; den <= 9; ++den) {
      const Rational a(num, den);
      const i64 c = ceil_strict(a);
      CHECK(Rational(c - 1) <= a);
      CHECK(a < Rational(c));
      CHECK((Rational(c - 1) == a) == a.is_integer());
    }
  }
}

TEST_CASE("rational normalization and rendering") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4).num() == -1);
  CHECK(Rational(2, -4).num() == -1);
  CHECK(Rational(2, -4).den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(4, 6).str() == "2/3");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(0).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), error);
}

TEST_CASE("rational arithmetic is exact") {
  for (i64 an = -12; an <= 12; ++an)
    for (i64 ad = 1; ad <= 5; ++ad)
      for (i64 bn = -12; bn <= 12; ++bn)
        for (i64 bd = 1; bd <= 5; ++bd) {
          const Rational a(an, ad), b(bn, bd);
          CHECK((a + b) - b == a);
          CHECK(a * b == b * a);
          if (bn != 0) CHECK((a / b) * b == a);
          CHECK(((a < b) || (a == b) || (b < a)));
        }
}

TEST_CASE("rational ordering is exact near ties") {
  CHECK(Rational(1, 3) < Rational(34, 101));
  CHECK(Rational(333333333333333333, 1000000000000000000) < Rational(1, 3));
  CHECK(Rational(2, 6) == Rational(1, 3));
}

TEST_CASE("checked arithmetic throws instead of wrapping") {
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), error);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), error);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), error);
  CHECK_THROWS_AS(checked_neg(INT64_MIN), error);
  try {
    checked_add(INT64_MAX, 1);
  } catch (const error& e) {
    CHECK(e.code() == errc::overflow);
  }
  CHECK(checked_add(2, 2) == 4);
}

TEST_CASE("rational overflow is reported") {
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), error);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), error);
}

TEST_CASE("gcd conventions") {
  CHECK(gcd_i64(6, 2) == 2);
  CHECK(gcd_i64(6, 0) == 6);
  CHECK(gcd_i64(0, 4) == 4);
  CHECK(gcd_i64(9, -6) == 3);
  CHECK(gcd_i64(-9, -6) == 3);
}

TEST_CASE("hashing agrees with equality") {
  std::hash<Rational> h;
  CHECK(h(Rational(2, 4)) == h(Rational(1, 2)));
  CHECK(h(Rational(3, 1)) == h(Rational(3)));
}

}  // TEST_SUITE
