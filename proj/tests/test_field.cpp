#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qeuclid/division.hpp"
#include "qeuclid/field.hpp"

using namespace qeuclid;

TEST_SUITE("field") {
  TEST_CASE("builtin rows") {
    FieldData F = builtinField(7);
    CHECK(F.M1 == Rational(9, 14));
    CHECK(F.discriminant == 28);
    CHECK(F.criticalPoints == std::vector<RationalPoint>{{Rational(1, 2), Rational(5, 14)},
                                                          {Rational(1, 2), Rational(9, 14)}});
    CHECK(F.coveringPairs == std::vector<Shift>{{0, 0}, {1, 0}, {-4, 1}, {-2, -1}});

    F = builtinField(19);
    CHECK(F.M1 == Rational(170, 171));
    CHECK(F.criticalPoints == std::vector<RationalPoint>{{0, Rational(20, 57)}, {0, Rational(37, 57)}});
    CHECK(F.coveringPairs.size() == 13);
    CHECK(F.coveringPairs.front() == Shift{0, 0});
    CHECK(F.coveringPairs.back() == Shift{90, -21});

    CHECK(builtinField(2).coveringPairs == std::vector<Shift>{{0, 0}});
    CHECK(builtinField(2).M1 == Rational(1, 2));
    CHECK(builtinField(3).coveringPairs == std::vector<Shift>{{0, 0}, {-1, 0}});
    CHECK(builtinField(6).coveringPairs == std::vector<Shift>{{0, 0}, {1, 0}, {-2, -1}});
    // The classical six pairs come first, then the pair that owns the region along the arc P5-P8.
    std::vector<Shift> eleven = builtinField(11).coveringPairs;
    CHECK(eleven == std::vector<Shift>{{0, 0}, {1, 0}, {-6, -2}, {-5, 1}, {5, -2}, {25, -8}, {-2, -1}});

    CHECK_THROWS_AS(builtinField(5), std::invalid_argument);
    CHECK_THROWS_AS(builtinField(13), std::invalid_argument);
    CHECK(builtinFieldIds() == std::vector<int>{2, 3, 6, 7, 11, 19});
    for (int m : builtinFieldIds()) CHECK(builtinField(m).M1 < 1);
  }

  TEST_CASE("custom rows are validated") {
    CHECK_NOTHROW(customField(14, Rational(1, 2), {}, {{0, 0}}));
    CHECK_THROWS(customField(5, Rational(1, 2), {}, {}));
    CHECK_THROWS(customField(8, Rational(1, 2), {}, {}));
    CHECK_THROWS(customField(1, Rational(1, 2), {}, {}));
    CHECK_THROWS(customField(7, Rational(0), {}, {}));
  }

  TEST_CASE("norm examples") {
    CHECK(norm(7, Rational(1, 2), Rational(5, 14)) == Rational(-9, 14));
    CHECK(norm(2, 0, Rational(1, 2)) == Rational(-1, 2));
    CHECK(norm(11, 0, 0) == 0);
  }

  TEST_CASE("shifted norm examples") {
    FieldData F7 = builtinField(7);
    CHECK(shiftedNorm(F7, Rational(1, 2), Rational(5, 14), 1, 0) == Rational(19, 14));
    CHECK(shiftedNorm(F7, Rational(1, 3), Rational(1, 5), 0, 0) == norm(7, Rational(1, 3), Rational(1, 5)));
    FieldData F11 = builtinField(11);
    CHECK(abs(shiftedNorm(F11, Rational(1, 2), Rational(7, 22), 5, -2)) == Rational(19, 22));
  }

  TEST_CASE("expansion agrees with direct evaluation on random inputs") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> shift(-1000, 1000);
    for (int m : builtinFieldIds()) {
      FieldData F = builtinField(m);
      for (int i = 0; i < 1700; ++i) {
        Rational a = oracle::randomRational(rng, 1000), b = oracle::randomRational(rng, 1000);
        long u = shift(rng), v = shift(rng);
        Rational direct = (a + u) * (a + u) - m * (b + v) * (b + v);
        REQUIRE(shiftedNorm(F, a, b, u, v) == direct);
        ShiftedNormEvaluator eval(F, a, b);
        std::size_t k = static_cast<std::size_t>(i) % F.coveringPairs.size();
        const Shift& s = F.coveringPairs[k];
        REQUIRE(eval.forPair(k) == norm(m, a + Rational(s.u), b + Rational(s.v)));
        // The form only sees squares.
        REQUIRE(norm(m, a, b) == norm(m, -a, b));
        REQUIRE(norm(m, a, b) == norm(m, a, -b));
      }
    }
  }

  TEST_CASE("critical points attain the minimum exactly") {
    for (int m : builtinFieldIds()) {
      FieldData F = builtinField(m);
      for (const RationalPoint& c : F.criticalPoints) {
        // Bring the point into [0, 1/2]^2 first; the norm only changes by ring translations
        // and sign flips, which the form does not see.
        Rounding rx = roundHalf(c.x), ry = roundHalf(c.y);
        ShiftedNormEvaluator eval(F, rx.a, ry.a);
        std::optional<Rational> best;
        for (std::size_t k = 0; k < F.coveringPairs.size(); ++k) {
          Rational f = abs(eval.forPair(k));
          if (!best || f < *best) best = f;
        }
        CAPTURE(m);
        REQUIRE(best.has_value());
        CHECK(*best == F.M1);
        // No shift at all does better: the critical point really is a minimum.
        CHECK(oracle::minShiftedNorm(m, rx.a, ry.a, 30) == F.M1);
      }
    }
  }

  TEST_CASE("ring arithmetic") {
    RingElement a{5, 1}, b{1, 2};
    CHECK(mul(2, a, b) == RingElement{9, 11});
    CHECK(norm(2, a) == 23);
    CHECK(norm(2, mul(2, a, b)) == norm(2, a) * norm(2, b));
    CHECK(conjugate(a) == RingElement{5, -1});
    CHECK(add(a, b) == RingElement{6, 3});
    CHECK(sub(a, b) == RingElement{4, -1});
    CHECK(divideToField(2, mul(2, a, b), b) == FieldElement{5, 1});
    CHECK(divides(2, b, mul(2, a, b)));
    CHECK(!divides(2, RingElement{3, 0}, a));
    CHECK(toString(a) == "5,1");
  }
}
