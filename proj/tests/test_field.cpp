#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "linvol/field.hpp"
#include "support/oracles.hpp"

using namespace linvol;

namespace {

const FieldElem s5 = FieldElem::sqrtOf(5);
// the two lengths of the golden involution
const FieldElem lenA = s5 - FieldElem(2);
const FieldElem lenB = (FieldElem(3) - s5) / FieldElem(2);

FieldElem randomElem(std::mt19937& rng, unsigned long d) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
  const FieldElem a = FieldElem::rational(num(rng), den(rng));
  if (d == 0) return a;
  return a + FieldElem::rational(num(rng), den(rng)) * FieldElem::sqrtOf(d);
}

}  // namespace

TEST_CASE("golden lengths add up to the unit interval") {
  CHECK(lenA + lenB + lenB == FieldElem(1));
}

TEST_CASE("rational inverse") {
  CHECK(FieldElem::rational(1, 3).inverse() == FieldElem(3));
  CHECK_THROWS_AS(FieldElem(0).inverse(), FieldError);
}

TEST_CASE("conjugate product collapses to a rational") {
  // (3 - sqrt5)/2 * (3 + sqrt5)/2; integer oracle: (3*3 - 5) / 4 = 1
  const FieldElem conj = (FieldElem(3) + s5) / FieldElem(2);
  CHECK(lenB * conj == FieldElem(1));
  CHECK(oracles::quadSign(9 - 5, 4, 0, 1, 5) > 0);
}

TEST_CASE("comparisons against the integer oracle") {
  // (3 - sqrt5)/2 vs 1/2  <=>  sign of (2 - sqrt5)/2
  CHECK(fieldCmp(lenB, FieldElem::rational(1, 2)) == Cmp::LT);
  CHECK(oracles::quadSign(2, 2, -1, 2, 5) < 0);

  CHECK(fieldCmp(FieldElem::rational(1, 3), FieldElem::rational(1, 3)) == Cmp::EQ);

  // sqrt5 - 2 vs (3 - sqrt5)/2  <=>  sign of (3 sqrt5 - 7)/2
  CHECK(fieldCmp(lenA, lenB) == Cmp::LT);
  CHECK(oracles::quadSign(-7, 2, 3, 2, 5) < 0);
}

TEST_CASE("mismatched radicands are rejected, rationals mix freely") {
  const FieldElem s2 = FieldElem::sqrtOf(2);
  CHECK_THROWS_AS(s2 + s5, FieldError);
  CHECK(s2 * FieldElem::rational(1, 2) + s2 * FieldElem::rational(1, 2) == s2);
  // an element whose irrational part cancels turns rational again
  CHECK((s2 - s2) + s5 == s5);
}

TEST_CASE("radicand validation") {
  CHECK_THROWS_AS(FieldElem::sqrtOf(12), FieldError);
  CHECK_THROWS_AS(FieldElem::sqrtOf(1), FieldError);
  CHECK(isSquarefree(10));
  CHECK_FALSE(isSquarefree(18));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 400; ++i) {
    const unsigned long d = i % 3 == 0 ? 0 : 5;
    const FieldElem x = randomElem(rng, d), y = randomElem(rng, d), z = randomElem(rng, d);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + (-x) == FieldElem(0));
    if (!x.isZero()) CHECK(x * x.inverse() == FieldElem(1));
  }
}

TEST_CASE("cmp is the sign of the difference and matches doubles") {
  std::mt19937 rng(7);
  for (int i = 0; i < 400; ++i) {
    const FieldElem x = randomElem(rng, 5), y = randomElem(rng, 5);
    const int s = (x - y).sign();
    CHECK(static_cast<int>(fieldCmp(x, y)) == s);
    CHECK(static_cast<int>(fieldCmp(y, x)) == -s);
    const double fx = x.toDouble(), fy = y.toDouble();
    if (std::abs(fx - fy) > 1e-6) CHECK((fx < fy) == (s < 0));
  }
}

TEST_CASE("canonical printing round-trips through the parser") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const FieldElem x = randomElem(rng, 5);
    CHECK(FieldElem::parse(x.str(), 5) == x);
  }
  CHECK(lenA.str() == "-2 + sqrt5");
  CHECK(lenB.str() == "3/2 - 1/2*sqrt5");
  CHECK(FieldElem(0).str() == "0");
  CHECK(FieldElem::parse("(3 - sqrt5)/2", 5) == lenB);
  CHECK_THROWS_AS(FieldElem::parse("sqrt3", 5), FieldError);
  CHECK_THROWS_AS(FieldElem::parse("sqrt5", 0), FieldError);
  CHECK_THROWS_AS(FieldElem::parse("1 +", 5), FieldError);
  CHECK_THROWS_AS(FieldElem::parse("2 / 0", 0), FieldError);
}
