#include <doctest.h>

#include <random>

#include "qeuclid/polysign.hpp"

using namespace qeuclid;

namespace {

Interval iv(const char* lo, const char* hi) { return {ExactNumber::parse(lo), ExactNumber::parse(hi)}; }

// Signs of p at n+1 equally spaced rational points of a rational interval.
void checkSamples(const Poly& p, const Rational& lo, const Rational& hi, const SignVerdict& v, int n = 100) {
  for (int i = 0; i <= n; ++i) {
    Rational a = lo + (hi - lo) * Rational(i, n);
    int s = sgn(p.eval(a));
    switch (v.sign) {
      case Sign::kPositive: REQUIRE(s > 0); break;
      case Sign::kNegative: REQUIRE(s < 0); break;
      case Sign::kNonNegative: REQUIRE(s >= 0); break;
      case Sign::kNonPositive: REQUIRE(s <= 0); break;
      case Sign::kZero: REQUIRE(s == 0); break;
      case Sign::kMixed: break;
    }
  }
}

}  // namespace

TEST_SUITE("polysign") {
  TEST_CASE("polynomial parsing and printing") {
    Poly p = Poly::parse("28*a^2+56*a-39");
    CHECK(p == Poly({-39, 56, 28}));
    CHECK(Poly::parse("28a^2 + 56a - 39") == p);
    CHECK(Poly::parse(p.str()) == p);
    CHECK(Poly::parse("-a").coeff(1) == -1);
    CHECK(Poly::parse("1/2*a^4 - 3").degree() == 4);
    CHECK(Poly::parse("0").isZero());
    CHECK_THROWS(Poly::parse("2*b"));
  }

  TEST_CASE("primitive form and proportionality") {
    Poly p({Rational(-39, 2), 28, 14});
    CHECK(p.primitive() == Poly({-39, 56, 28}));
    CHECK(positivelyProportional(Poly::parse("2*a+1"), Poly::parse("6*a+3")));
    CHECK(!positivelyProportional(Poly::parse("2*a+1"), Poly::parse("-2*a-1")));
    CHECK(!positivelyProportional(Poly::parse("2*a+1"), Poly::parse("2*a-1")));
    CHECK(positivelyProportional(Poly(), Poly()));
    CHECK(!positivelyProportional(Poly(), Poly(1)));
  }

  TEST_CASE("division and gcd") {
    Poly p = Poly::parse("a^3 - 1"), d = Poly::parse("a - 1");
    auto [q, r] = Poly::divmod(p, d);
    CHECK(q == Poly::parse("a^2 + a + 1"));
    CHECK(r.isZero());
    CHECK(Poly::gcd(Poly::parse("a^2 - 1"), Poly::parse("a^2 + 2*a + 1")) == Poly::parse("a + 1"));
  }

  TEST_CASE("reference quadratic cases") {
    SignVerdict v = quadSignOnInterval(Poly::parse("4*a^2+8*a+1"), iv("0", "1/2"));
    CHECK(v.sign == Sign::kPositive);
    CHECK(v.label == CaseLabel::kA2);

    v = quadSignOnInterval(Poly::parse("4*a^2-8*a+7"), iv("1/4", "1/2"));
    CHECK(v.sign == Sign::kPositive);
    CHECK(v.label == CaseLabel::kMinus);

    // The claim "B <= 1/2" on [x(P8), 1/2] for m = 7: the polynomial is negative there.
    v = quadSignOnInterval(Poly::parse("28*a^2+56*a-39"), iv("-1 + 1/14*sqrt(217)", "1/2"));
    CHECK(v.nonPositive());
    CHECK(v.label == CaseLabel::kB);

    v = polySignOnInterval(Poly::parse("-392*a^2+1036*a+5"), iv("0", "-1 + 1/14*sqrt(217)"));
    CHECK(v.nonNegative());
    CHECK(v.label == CaseLabel::kB);

    v = quadSignOnInterval(Poly(1), iv("-3", "5"));
    CHECK(v.sign == Sign::kPositive);
    CHECK(v.label == CaseLabel::kConstant);
  }

  TEST_CASE("remaining quadratic cases") {
    // Double root inside the interval.
    SignVerdict v = quadSignOnInterval(Poly::parse("4*a^2-4*a+1"), iv("0", "1"));
    CHECK(v.sign == Sign::kNonNegative);
    CHECK(v.label == CaseLabel::kZero);
    // Roots 1 and 2: left of both, between, and straddling one or both.
    Poly p = Poly::parse("a^2-3*a+2");
    CHECK(quadSignOnInterval(p, iv("0", "1/2")).label == CaseLabel::kA1);
    CHECK(quadSignOnInterval(p, iv("5/4", "7/4")).label == CaseLabel::kB);
    CHECK(quadSignOnInterval(p, iv("5/2", "3")).label == CaseLabel::kA2);
    CHECK(quadSignOnInterval(p, iv("1/2", "3/2")).sign == Sign::kMixed);
    CHECK(quadSignOnInterval(p, iv("3/2", "5/2")).sign == Sign::kMixed);
    CHECK(quadSignOnInterval(p, iv("0", "3")).sign == Sign::kMixed);
    // A root exactly at an endpoint keeps the sign weak rather than mixed.
    v = quadSignOnInterval(p, iv("0", "1"));
    CHECK(v.sign == Sign::kNonNegative);
    CHECK(quadSignOnInterval(Poly(), iv("0", "1")).sign == Sign::kZero);
    CHECK(quadSignOnInterval(Poly::parse("2*a-1"), iv("0", "1/2")).sign == Sign::kNonPositive);
    CHECK_THROWS_AS(quadSignOnInterval(Poly::parse("a^3"), iv("0", "1")), std::invalid_argument);
  }

  TEST_CASE("Sturm classification beyond degree two") {
    SignVerdict v = polySignOnInterval(Poly::parse("a^4-1"), iv("0", "1/2"));
    CHECK(v.sign == Sign::kNegative);
    CHECK(v.label == CaseLabel::kSturm);
    checkSamples(Poly::parse("a^4-1"), 0, Rational(1, 2), v);
    CHECK(polySignOnInterval(Poly::parse("a^2"), iv("-1", "1")).sign == Sign::kNonNegative);
    CHECK(polySignOnInterval(Poly::parse("a^3-a"), iv("-2", "2")).sign == Sign::kMixed);
    // (a^2 - 2)^2 touches zero at sqrt(2).
    CHECK(polySignOnInterval(Poly::parse("a^4-4*a^2+4"), iv("0", "2")).sign == Sign::kNonNegative);
    // Irrational endpoints: a^3 - 2 vanishes at the cube root of 2, outside [0, sqrt(3/2)].
    CHECK(polySignOnInterval(Poly::parse("a^3-2"), iv("0", "sqrt(3/2)")).sign == Sign::kNegative);
  }

  TEST_CASE("verdicts never contradict dense sampling; quadratic and Sturm agree") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int i = 0; i < 400; ++i) {
      Poly p({Rational(c(rng)), Rational(c(rng)), Rational(c(rng))});
      Rational lo(c(rng), 8), hi = lo + Rational(std::abs(c(rng)) + 1, 8);
      Interval range{ExactNumber(lo), ExactNumber(hi)};
      SignVerdict q = quadSignOnInterval(p, range);
      SignVerdict s = sturmSignOnInterval(p, range);
      checkSamples(p, lo, hi, q);
      CHECK(q.sign == s.sign);
      CHECK(polySignOnInterval(p, range) == q);
      // Positive scaling changes nothing.
      CHECK(quadSignOnInterval(p * Rational(7, 3), range) == q);
      Poly cubic = p * Poly({Rational(c(rng)), 1});
      SignVerdict sc = polySignOnInterval(cubic, range);
      checkSamples(cubic, lo, hi, sc);
    }
  }

  TEST_CASE("interval and labels") {
    CHECK_THROWS_AS(iv("1", "0"), std::invalid_argument);
    Interval r = iv("0", "1/2");
    CHECK(r.contains(ExactNumber::parse("1/3")));
    CHECK(!r.contains(ExactNumber::parse("sqrt(2)")));
    for (CaseLabel l : {CaseLabel::kMinus, CaseLabel::kZero, CaseLabel::kA1, CaseLabel::kA2, CaseLabel::kB,
                        CaseLabel::kC, CaseLabel::kD, CaseLabel::kE, CaseLabel::kLinear, CaseLabel::kConstant,
                        CaseLabel::kSturm, CaseLabel::kSigns}) {
      CHECK(parseCaseLabel(toString(l)) == l);
    }
    CHECK_THROWS(parseCaseLabel("q"));
  }
}
