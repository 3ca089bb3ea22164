#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qeuclid/division.hpp"

using namespace qeuclid;

namespace {

std::size_t stepBound(const FieldData& F, const RingElement& beta) {
  // ceil(log |Norm(beta)| / log(1/M1)) + 1
  double n = std::fabs(norm(F.m, beta).get_d());
  if (n <= 1) return 1;
  return static_cast<std::size_t>(std::ceil(std::log(n) / std::log(1 / F.M1.get_d()))) + 1;
}

}  // namespace

TEST_SUITE("division") {
  TEST_CASE("rounding examples") {
    Rounding r = roundHalf(Rational(7, 10));
    CHECK(r.x == 1);
    CHECK(r.s == -1);
    CHECK(r.a == Rational(3, 10));
    r = roundHalf(Rational(-1, 4));
    CHECK(r.x == 0);
    CHECK(r.s == -1);
    CHECK(r.a == Rational(1, 4));
    r = roundHalf(Rational(3, 2));
    CHECK(r.x == 2);
    CHECK(r.s == -1);
    CHECK(r.a == Rational(1, 2));
    r = roundHalf(Rational(5, 2));
    CHECK(r.x == 2);
    CHECK(r.s == 1);
    r = roundHalf(Rational(-1, 2));
    CHECK(r.x == 0);
    CHECK(r.a == Rational(1, 2));
    r = roundHalf(Rational(4));
    CHECK(r.x == 4);
    CHECK(r.s == 1);
    CHECK(r.a == 0);
  }

  TEST_CASE("rounding reconstructs its input") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
      Rational a0 = oracle::randomRational(rng, 1000) * 37;
      Rounding r = roundHalf(a0);
      REQUIRE(Rational(r.x) + r.s * r.a == a0);
      REQUIRE(r.a >= 0);
      REQUIRE(r.a <= Rational(1, 2));
      REQUIRE(abs(Rational(a0 - Rational(r.x))) <= Rational(1, 2));
    }
  }

  TEST_CASE("division examples") {
    DivisionResult d = divide(builtinField(7), {Rational(1, 2), Rational(5, 14)});
    CHECK(d.pairUsed == Shift{0, 0});
    CHECK(d.remainderNorm == Rational(-9, 14));
    CHECK(d.quotient == RingElement{0, 0});

    for (int m : builtinFieldIds()) {
      d = divide(builtinField(m), {3, -4});
      CHECK(d.quotient == RingElement{3, -4});
      CHECK(d.remainderNorm == 0);
    }

    FieldData F19 = builtinField(19);
    d = divide(F19, {0, Rational(20, 57)});
    CHECK(abs(d.remainderNorm) == F19.M1);
    CHECK(oracle::minShiftedNorm(19, 0, Rational(20, 57), 1000) == F19.M1);

    d = divide(F19, {Rational(1, 3), Rational(1, 3)});
    CHECK(abs(d.remainderNorm) <= F19.M1);
  }

  TEST_CASE("all-pairs mode returns the smallest norm among the pairs") {
    FieldData F = builtinField(11);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
      FieldElement xi{oracle::randomRational(rng, 100) * 5, oracle::randomRational(rng, 100) * 5};
      DivisionResult first = divide(F, xi), best = divide(F, xi, {true});
      REQUIRE(abs(best.remainderNorm) <= abs(first.remainderNorm));
      Rounding ra = roundHalf(xi.a), rb = roundHalf(xi.b);
      ShiftedNormEvaluator eval(F, ra.a, rb.a);
      for (std::size_t k = 0; k < F.coveringPairs.size(); ++k) REQUIRE(abs(best.remainderNorm) <= abs(eval.forPair(k)));
    }
  }

  TEST_CASE("remainders stay within M1 and equal the reduced norm") {
    std::mt19937_64 rng(2026);
    for (int m : builtinFieldIds()) {
      FieldData F = builtinField(m);
      for (int i = 0; i < 1500; ++i) {
        FieldElement xi{oracle::randomRational(rng, 1000) * 7, oracle::randomRational(rng, 1000) * 7};
        DivisionResult d = divide(F, xi);
        Rational direct = norm(m, xi.a - Rational(d.quotient.x), xi.b - Rational(d.quotient.y));
        REQUIRE(d.remainderNorm == direct);
        REQUIRE(abs(d.remainderNorm) <= F.M1);
        // The same value computed in the reduced coordinates.
        Rounding ra = roundHalf(xi.a), rb = roundHalf(xi.b);
        REQUIRE(shiftedNorm(F, ra.a, rb.a, d.pairUsed.u, d.pairUsed.v) == direct);
        REQUIRE(d.signA == ra.s);
        REQUIRE(d.signB == rb.s);
      }
    }
  }

  TEST_CASE("an incomplete pair list is reported") {
    FieldData F = customField(7, Rational(9, 14), {}, {{0, 0}});
    CHECK_THROWS_AS(divide(F, {Rational(1, 2), Rational(1, 2)}), std::logic_error);
  }

  TEST_CASE("gcd examples") {
    FieldData F2 = builtinField(2);
    RingElement a{5, 1}, b{1, 2};
    RingElement g = gcd(F2, a, b);
    CHECK(oracle::ringDivides(2, g, a));
    CHECK(oracle::ringDivides(2, g, b));
    CHECK(abs(norm(2, g)) == oracle::idealNorm(2, a, b));

    CHECK(gcd(F2, a, {0, 0}) == a);
    CHECK(gcd(F2, {0, 0}, {-5, -1}) == RingElement{5, 1});
    RingElement self = gcd(F2, a, a);
    CHECK(abs(norm(2, self)) == abs(norm(2, a)));
    CHECK(oracle::ringDivides(2, self, a));
    CHECK(oracle::ringDivides(2, a, self));
    CHECK_THROWS_AS(gcd(F2, {0, 0}, {0, 0}), std::invalid_argument);

    // A common factor is recovered up to a unit.
    FieldData F7 = builtinField(7);
    RingElement c{3, 1};
    RingElement h = gcd(F7, mul(7, c, {2, 5}), mul(7, c, {4, -1}));
    CHECK(abs(norm(7, h)) == oracle::idealNorm(7, mul(7, c, {2, 5}), mul(7, c, {4, -1})));
    CHECK(oracle::ringDivides(7, c, h));
  }

  TEST_CASE("gcd generates the ideal, normalizes, and converges fast") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> coord(-50, 50);
    for (int m : builtinFieldIds()) {
      FieldData F = builtinField(m);
      for (int i = 0; i < 200; ++i) {
        RingElement a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
        if (a.isZero() && b.isZero()) continue;
        GcdResult r = gcdWithSteps(F, a, b);
        const RingElement& g = r.gcd;
        REQUIRE(!g.isZero());
        REQUIRE(oracle::ringDivides(m, g, a));
        REQUIRE(oracle::ringDivides(m, g, b));
        REQUIRE(abs(norm(m, g)) == oracle::idealNorm(m, a, b));
        REQUIRE((sgn(g.x) > 0 || (sgn(g.x) == 0 && sgn(g.y) > 0)));
        if (!b.isZero()) REQUIRE(r.steps <= stepBound(F, b));
      }
    }
  }
}
