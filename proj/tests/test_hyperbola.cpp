#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qeuclid/covering.hpp"
#include "qeuclid/hyperbola.hpp"

using namespace qeuclid;

namespace {

Family fam(int m) { return Family::of(builtinField(m)); }
ExactNumber ex(const char* s) { return ExactNumber::parse(s); }
Interval iv(const char* lo, const char* hi) { return {ex(lo), ex(hi)}; }
Branch B(std::int64_t u, std::int64_t v, int t, int e) { return {u, v, t, e}; }

}  // namespace

TEST_SUITE("hyperbola") {
  TEST_CASE("branch text and owner bounds") {
    CHECK(parseBranch("B[991,227,1,-1]") == B(991, 227, 1, -1));
    CHECK(toString(B(-3, -1, -1, 1)) == "B[-3,-1,-1,1]");
    CHECK_THROWS(parseBranch("B[1,0,2,1]"));
    CHECK(upperBranch({1, 0}) == B(1, 0, 1, -1));
    CHECK(lowerBranch({1, 0}) == B(1, 0, 1, 1));
    CHECK(upperBranch({-2, -1}) == B(-2, -1, -1, 1));
    CHECK(lowerBranch({-2, -1}) == B(-2, -1, -1, -1));
    CHECK(monotoneDirection(B(1, 0, 1, 1)) == 1);
    CHECK(monotoneDirection(B(-6, 1, 1, 1)) == -1);
    CHECK(monotoneDirection(B(-3, -1, -1, 1)) == 1);
    CHECK(Curve::constant(Rational(1, 2)).str() == "1/2");
  }

  TEST_CASE("domain examples") {
    CHECK(!domain(fam(7), B(0, 0, 1, 1), iv("0", "1/2")));
    CHECK(domain(fam(7), B(0, 0, 1, -1), iv("0", "1/2")));
    CHECK(domain(fam(6), B(1, 0, 1, 1), iv("0", "1/2")));
    CHECK(radicand(fam(7), B(0, 0, 1, 1)) == Poly({Rational(-9, 98), 0, Rational(1, 7)}));
  }

  TEST_CASE("evaluation examples") {
    CHECK(evalAt(fam(7), B(0, 0, 1, -1), ExactNumber(0L)) == ex("3/14*sqrt(2)"));
    CHECK(evalAt(fam(11), B(1, 0, 1, -1), ExactNumber(0L)) == ex("1/22*sqrt(82)"));
    CHECK(evalAt(fam(19), B(991, 227, 1, -1), ExactNumber(0L)) == ex("-227 + 11/57*sqrt(1387901)"));
    CHECK(evalAt(fam(7), Curve::constant(Rational(1, 2)), ex("sqrt(2)")) == ex("1/2"));
    CHECK_THROWS(evalAt(fam(7), B(0, 0, 1, 1), ExactNumber(0L)));
    // At an irrational abscissa the value denests: x(P8) for m = 7.
    ExactNumber y = evalAt(fam(7), B(1, 0, 1, -1), ex("-1 + 1/14*sqrt(217)"));
    CHECK(y == ex("1/2"));
  }

  TEST_CASE("intersection examples") {
    std::vector<Point> p = intersect(fam(7), B(1, 0, 1, 1), B(0, 0, 1, -1));
    REQUIRE(p.size() == 1);
    CHECK(p[0] == Point{ex("1/7"), ex("1/98*sqrt(910)")});
    p = intersect(fam(6), B(1, 0, 1, 1), B(0, 0, 1, -1));
    REQUIRE(p.size() == 1);
    CHECK(p[0] == Point{ex("1/4"), ex("1/24*sqrt(78)")});
    p = intersect(fam(11), B(-5, 1, 1, 1), B(-2, -1, -1, 1));
    REQUIRE(p.size() == 1);
    CHECK(p[0] == Point{ex("7/2 - 3/35*sqrt(1645)"), ex("9/770*sqrt(1645)")});
    CHECK_THROWS(intersect(fam(7), B(1, 0, 1, 1), B(1, 0, 1, 1)));
  }

  TEST_CASE("line intersection examples") {
    std::vector<Point> p = intersectLine(fam(7), B(1, 0, 1, -1), Axis::kY, Rational(1, 2));
    REQUIRE(p.size() == 1);
    CHECK(p[0] == Point{ex("-1 + 1/14*sqrt(217)"), ex("1/2")});
    p = intersectLine(fam(19), B(-2, 0, 1, -1), Axis::kY, Rational(1, 2));
    REQUIRE(p.size() == 1);
    CHECK(p[0].x == ex("2 - 1/114*sqrt(48811)"));
    for (int m : builtinFieldIds()) {
      Family f = fam(m);
      for (std::int64_t u : {0, 1, 2, 5}) {
        p = intersectLine(f, B(u, 0, 1, -1), Axis::kX, 0);
        Rational y2 = (Rational(u * u) + f.M) / m;
        if (signOf(ExactNumber::sqrt(y2) - ExactNumber(Rational(1, 2))) > 0) continue;
        REQUIRE(p.size() == 1);
        CHECK(p[0].y == ExactNumber::sqrt(y2));
      }
    }
  }

  TEST_CASE("reference dominance proofs") {
    DominanceProof d = dominates(fam(7), B(1, 0, 1, -1), B(0, 0, 1, -1), iv("0", "1/7"));
    CHECK(d.holds);
    REQUIRE(d.reduced.has_value());
    CHECK(positivelyProportional(*d.reduced, Poly::parse("2*a+1")));

    d = dominates(fam(11), B(-6, -2, -1, 1), B(1, 0, 1, 1), iv("4/11", "1/2"));
    CHECK(d.holds);
    REQUIRE(d.reduced.has_value());
    CHECK(*d.reduced == Poly::parse("20*a^2-100*a+57"));
    CHECK(d.verdict.label == CaseLabel::kA1);

    d = dominates(fam(19), B(90, -21, -1, 1), B(-80, 18, 1, 1), iv("0", "2/5"));
    CHECK(d.holds);
    REQUIRE(d.reduced.has_value());
    CHECK(*d.reduced == Poly::parse("4*a^2+40*a+86121"));
    CHECK(d.verdict.label == CaseLabel::kMinus);

    // The reverse comparison fails with the same polynomial negated.
    DominanceProof back = dominates(fam(19), B(-80, 18, 1, 1), B(90, -21, -1, 1), iv("0", "2/5"));
    CHECK(!back.holds);

    // Constant bounds.
    d = compare(fam(7), B(1, 0, 1, 1), Curve::constant(Rational(1, 2)), iv("-1 + 1/14*sqrt(217)", "1/2"),
                Direction::kLeq);
    CHECK(d.holds);
    REQUIRE(d.reduced.has_value());
    CHECK(positivelyProportional(*d.reduced, Poly::parse("28*a^2+56*a-39")));

    // Undefined branches are an error.
    CHECK_THROWS(dominates(fam(7), B(0, 0, 1, 1), B(0, 0, 1, -1), iv("0", "1/2")));
  }

  TEST_CASE("dominance of a branch with itself holds with the zero polynomial") {
    for (int m : builtinFieldIds()) {
      DominanceProof d = dominates(fam(m), B(1, 0, 1, -1), B(1, 0, 1, -1), iv("0", "1/2"));
      CHECK(d.holds);
      CHECK((!d.reduced || d.reduced->isZero()));
    }
  }

  TEST_CASE("monotonicity on certificate branches") {
    for (int m : builtinFieldIds()) {
      Certificate cert = loadCertificate(std::string(QEUCLID_CERT_DIR) + "/m" + std::to_string(m) + ".cert");
      Family f = cert.family();
      std::set<Branch> branches;
      for (const Region& r : cert.regions) {
        for (const RegionItem& it : r.items) {
          if (it.isArc) branches.insert(it.arc);
        }
      }
      for (const Branch& b : branches) {
        // 50 increasing pairs of samples inside the branch's domain on [0, 1/2].
        std::vector<Rational> xs;
        for (int i = 0; i <= 50; ++i) {
          Rational a(i, 100);
          Rational s = a + Rational(static_cast<long>(b.u));
          if (s * s - b.epsilon * f.M >= 0) xs.push_back(a);
        }
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
          ExactNumber y0 = evalAt(f, b, ExactNumber(xs[i])), y1 = evalAt(f, b, ExactNumber(xs[i + 1]));
          int dir = signOf(y1 - y0);
          CAPTURE(toString(b));
          CHECK((dir == 0 || dir == monotoneDirection(b)));
        }
      }
    }
  }

  TEST_CASE("intersections satisfy both equations; proofs agree with samples") {
    for (int m : builtinFieldIds()) {
      Certificate cert = loadCertificate(std::string(QEUCLID_CERT_DIR) + "/m" + std::to_string(m) + ".cert");
      Family f = cert.family();
      for (const CertPoint& p : cert.points) {
        std::vector<Branch> on;
        for (const Locus& l : p.on) {
          if (l.kind == Locus::Kind::kBranch) on.push_back(l.branch);
        }
        if (on.size() < 2) continue;
        std::vector<Point> cross = intersect(f, on[0], on[1]);
        bool found = false;
        for (const Point& q : cross) {
          CHECK(onBranch(f, on[0], q));
          CHECK(onBranch(f, on[1], q));
          CHECK(evalAt(f, on[0], q.x) == q.y);
          found = found || q == p.at;
        }
        CAPTURE(p.label);
        CHECK(found);
      }
      for (const Claim& c : cert.claims) {
        DominanceProof d = compare(f, c.lhsCurve(), c.rhsCurve(), c.on, c.direction());
        REQUIRE(d.holds);
        RationalInterval lo = enclose(c.on.lo, 64), hi = enclose(c.on.hi, 64);
        for (int i = 0; i < 20; ++i) {
          // Samples strictly inside rational enclosures of the interval.
          Rational a = lo.hi + (hi.lo - lo.hi) * Rational(i, 19);
          if (!c.on.contains(ExactNumber(a))) continue;
          Rational sa = a + Rational(static_cast<long>(c.lhs.u));
          if (c.lhs.epsilon > 0 && sa * sa < f.M) continue;
          if (c.kind == ClaimKind::kGeq) {
            Rational sb = a + Rational(static_cast<long>(c.rhs.u));
            if (c.rhs.epsilon > 0 && sb * sb < f.M) continue;
          }
          oracle::RawSum diff = oracle::branchMinus(f, c.lhs, a, oracle::curveSum(f, c.rhsCurve(), a));
          int s = oracle::intervalSign(diff);
          CAPTURE(toString(c.lhs));
          CHECK((c.kind == ClaimKind::kLeqc ? s <= 0 : s >= 0));
        }
      }
    }
  }
}
