#include "doctest.h"

#include "psmod/field.hpp"
#include "psmod/matrix.hpp"
#include "psmod/rng.hpp"

#include "util.hpp"

using namespace psmod;

TEST_CASE("rational field arithmetic is exact and canonicalized") {
  RationalField q;
  auto half = q.parse("2/4");
  CHECK(q.to_string(half) == "1/2");
  auto third = q.parse("1/3");
  CHECK(q.to_string(q.add(half, third)) == "5/6");
  CHECK(q.to_string(q.mul(half, third)) == "1/6");
  CHECK(q.to_string(q.inv(q.parse("-3/7"))) == "-7/3");
  CHECK(q.sign(q.parse("-3/7")) == -1);
  CHECK(q.sign(q.zero()) == 0);
  CHECK(q.is_zero(q.sub(half, half)));
  CHECK_THROWS_AS(q.inv(q.zero()), Error);
  CHECK_THROWS_AS(q.parse("abc"), MalformedInput);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5);
  CHECK(f5.from_long(-1) == 4);
  CHECK(f5.from_long(12) == 2);
  for (std::uint64_t a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.neg(2) == 3);
  CHECK_THROWS_AS(PrimeField(4), MalformedInput);
  CHECK_THROWS_AS(PrimeField(1), MalformedInput);
  CHECK_THROWS_AS(f5.parse("1/2"), MalformedInput);
  CHECK(f5.parse("-3") == 2);

  PrimeField big(1000003);
  for (std::uint64_t a : {2ull, 999999ull, 123456ull}) CHECK(big.mul(a, big.inv(a)) == 1);
}

TEST_CASE("matrix algebra basics") {
  RationalField q;
  auto a = Matrix<RationalField>::from_rows(q, {{1, 2}, {3, 4}});
  auto b = Matrix<RationalField>::from_rows(q, {{0, 1}, {1, 0}});
  CHECK((a * b) == Matrix<RationalField>::from_rows(q, {{2, 1}, {4, 3}}));
  CHECK((a + b) == Matrix<RationalField>::from_rows(q, {{1, 3}, {4, 4}}));
  CHECK((a - a).is_zero());
  CHECK(a.transpose() == Matrix<RationalField>::from_rows(q, {{1, 3}, {2, 4}}));
  CHECK(a.hstack(b).cols() == 4);
  CHECK(a.vstack(b).rows() == 4);
  CHECK(a.column(1) == Matrix<RationalField>::from_rows(q, {{2}, {4}}));
  CHECK(Matrix<RationalField>::identity(q, 2) * a == a);

  // Zero-extent shapes multiply and stack without special cases.
  Matrix<RationalField> e03(q, 0, 3);
  Matrix<RationalField> e30(q, 3, 0);
  CHECK((e03 * e30).rows() == 0);
  CHECK((e30 * e03).is_zero());
  CHECK((e30 * e03).rows() == 3);
}

TEST_CASE("deterministic rng stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(7);
  for (int i = 0; i < 200; ++i) {
    long s = c.pool_scalar();
    CHECK(s >= -2);
    CHECK(s <= 2);
  }
}
