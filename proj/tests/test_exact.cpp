#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qeuclid/exact.hpp"

using namespace qeuclid;

namespace {

ExactNumber ex(const char* text) { return ExactNumber::parse(text); }

ExactNumber build(const Rational& r, std::vector<std::pair<Rational, Rational>> terms) {
  return ExactNumber::normalize(r, terms);
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rationals parse canonically and reject decimals") {
    CHECK(parseRational("6/8") == Rational(3, 4));
    CHECK(parseRational("-3") == Rational(-3));
    CHECK(parseRational("+1/2") == Rational(1, 2));
    CHECK_THROWS_AS(parseRational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parseRational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parseRational(""), std::invalid_argument);
    Rational q = parseRational("-10/4");
    CHECK(q.get_den() == 2);
    CHECK(q.get_num() == -5);
  }

  TEST_CASE("normalize extracts squares, folds perfect squares and merges like radicals") {
    ExactNumber a = build(0, {{1, 8}});
    CHECK(a.rationalPart() == 0);
    REQUIRE(a.terms().size() == 1);
    CHECK(a.terms()[0].coefficient == 2);
    CHECK(a.terms()[0].radicand == 2);

    CHECK(build(1, {{1, 2}, {-1, 2}}) == ExactNumber(1L));
    CHECK(build(0, {{1, 9}}) == ExactNumber(3L));
    CHECK(build(0, {{1, Rational(1, 4)}}) == ExactNumber(Rational(1, 2)));
    // sqrt(2/9) = sqrt(2)/3 and sqrt(1/2) = sqrt(2)/2.
    CHECK(build(0, {{1, Rational(2, 9)}, {1, Rational(1, 2)}}) == build(0, {{Rational(5, 6), 2}}));
    CHECK_THROWS_AS(build(0, {{1, -2}}), std::domain_error);
  }

  TEST_CASE("square splitting") {
    SquareSplit s = splitSquare(Integer(72));
    CHECK(s.square_root == 6);
    CHECK(s.core == 2);
    s = splitSquare(Integer(1387901));
    CHECK(s.square_root * s.square_root * s.core == 1387901);
  }

  TEST_CASE("arithmetic examples") {
    CHECK(ex("1 + sqrt(2)") * ex("1 - sqrt(2)") == ExactNumber(-1L));
    CHECK(ex("1 + 2*sqrt(2) - sqrt(5)") * ex("1 + 2*sqrt(2) + sqrt(5)") == ex("4 + 4*sqrt(2)"));
    CHECK(ex("3*sqrt(2)") * ex("5*sqrt(2)") == ExactNumber(30L));
    CHECK(ex("sqrt(2)") * ex("sqrt(3)") == ex("sqrt(6)"));
    CHECK(ex("sqrt(6)") * ex("sqrt(10)") == ex("2*sqrt(15)"));
    CHECK(ex("1/2 + sqrt(3)") / Rational(2) == ex("1/4 + 1/2*sqrt(3)"));
  }

  TEST_CASE("sign examples") {
    CHECK(signOf(ex("-73/44 + 1/44*sqrt(5335)")) == 1);
    CHECK(signOf(ex("2*sqrt(2)") - ex("2*sqrt(2)")) == 0);
    CHECK(signOf(ex("1 + sqrt(2) - sqrt(5)")) == 1);
    CHECK(signOf(ex("1 + sqrt(2) - sqrt(5) - sqrt(3)")) == -1);
    CHECK(signOf(ExactNumber(0L)) == 0);
    CHECK(signOf(ex("-1/3")) == -1);
    // Values that are nearly zero still get the right sign.
    CHECK(signOf(ex("sqrt(2) + sqrt(3) - sqrt(10) + 1/1000")) == -1);
    CHECK(signOf(ex("sqrt(2) + sqrt(3) - sqrt(10) + 1/60")) == 1);
    CHECK(signOf(ex("-227 + 11/57*sqrt(1387901)")) == 1);
  }

  TEST_CASE("comparison examples") {
    CHECK(cmp(ex("sqrt(2)"), ex("3/2")) == std::strong_ordering::less);
    ExactNumber x = ex("-4 + 1/57*sqrt(61561)");
    CHECK(cmp(x, x) == std::strong_ordering::equal);
    CHECK(cmp(x, ex("1/2")) == std::strong_ordering::less);
    CHECK(ex("2 - 1/114*sqrt(48811)") < ex("-2 + 1/114*sqrt(74651)"));
  }

  TEST_CASE("text round trip") {
    for (const char* s : {"0", "-3/7", "sqrt(2)", "-73/44 + 1/44*sqrt(5335)", "1/2 - 1/342*sqrt(1879)",
                          "-793901951/1611846 + 113/805923*sqrt(12340725844507)", "1 + sqrt(2) - 2*sqrt(3)"}) {
      ExactNumber x = ex(s);
      CHECK(ExactNumber::parse(x.str()) == x);
    }
    CHECK_THROWS(ex("0.5"));
    CHECK_THROWS(ex("sqrt(-2)"));
    CHECK_THROWS(ex("1 + "));
  }

  TEST_CASE("ABS conjugate reduces the number of radicals") {
    for (const char* s : {"1 + sqrt(2) - sqrt(5)", "3 - 2*sqrt(7)", "1 + sqrt(2) - sqrt(5) - sqrt(3)",
                          "-1 + sqrt(2) + sqrt(3) - sqrt(11)"}) {
      ExactNumber x = ex(s);
      ExactNumber y = x * absConjugate(x);
      CHECK(signOf(absConjugate(x)) == 1);
      CHECK(y.radicalCount() < x.radicalCount());
    }
  }

  TEST_CASE("conjugate norm is rational and vanishes exactly at zero") {
    CHECK(conjugateNorm(ex("1 + sqrt(2)")) == -1);
    CHECK(conjugateNorm(ex("sqrt(2) + sqrt(3) - sqrt(5)")) != 0);
    CHECK(conjugateNorm(ExactNumber(0L)) == 0);
  }

  TEST_CASE("enclosures contain the value") {
    ExactNumber x = ex("-73/44 + 1/44*sqrt(5335)");
    RationalInterval r = enclose(x, 64);
    CHECK(r.lo <= r.hi);
    CHECK(signOf(x - r.lo) >= 0);
    CHECK(signOf(ExactNumber(r.hi) - x) >= 0);
    CHECK(Rational(r.hi - r.lo) < Rational(1, 1000000));
  }

  TEST_CASE("denesting square roots") {
    auto r = sqrtExact(ex("3 + 2*sqrt(2)"));
    REQUIRE(r.has_value());
    CHECK(*r == ex("1 + sqrt(2)"));
    CHECK(sqrtExact(ex("9/4")) == ex("3/2"));
    CHECK(!sqrtExact(ex("1 + sqrt(2)")).has_value());
    CHECK(!sqrtExact(ex("-4")).has_value());
  }

  TEST_CASE("signOf agrees with the MPFR interval oracle on random sums") {
    std::mt19937_64 rng(20260101);
    for (int i = 0; i < 2000; ++i) {
      oracle::RawSum raw = oracle::randomSum(rng);
      ExactNumber x = ExactNumber::normalize(raw.rational, raw.terms);
      REQUIRE(signOf(x) == oracle::intervalSign(raw));
    }
  }

  TEST_CASE("algebraic properties on random numbers") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
      oracle::RawSum ra = oracle::randomSum(rng), rb = oracle::randomSum(rng);
      ExactNumber a = ExactNumber::normalize(ra.rational, ra.terms);
      ExactNumber b = ExactNumber::normalize(rb.rational, rb.terms);
      CHECK((a + b) - b == a);
      CHECK(signOf(-a) == -signOf(a));
      int sq = signOf(a * a);
      CHECK(sq >= 0);
      CHECK((sq == 0) == (signOf(a) == 0));
      CHECK(a * b == b * a);
      CHECK(ExactNumber::parse(a.str()) == a);
    }
  }
}
