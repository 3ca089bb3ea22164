#include <algorithm>
#include <map>
#include <sstream>

#include "covering_internal.hpp"
#include "qeuclid/covering.hpp"

namespace qeuclid {

namespace {

Rational r64(std::int64_t n) { return Rational(static_cast<long>(n)); }

std::string pointName(const CertPoint& p) { return p.isCritical() ? p.label : "P" + p.label; }

std::string claimName(std::size_t index, const Claim& c) {
  std::string kind = c.kind == ClaimKind::kGeq ? "geq" : c.kind == ClaimKind::kGeqc ? "geqc" : "leqc";
  return "claim " + std::to_string(index + 1) + " (" + kind + " " + toString(c.lhs) + " " + c.rhsCurve().str() +
         " on [" + c.on.lo.str() + ", " + c.on.hi.str() + "])";
}

std::string regionName(const Region& r) {
  return "region (" + std::to_string(r.owner.u) + "," + std::to_string(r.owner.v) + ")";
}

std::string ivText(const Interval& iv) { return "[" + iv.lo.str() + ", " + iv.hi.str() + "]"; }

bool inUnitHalf(const ExactNumber& t) { return signOf(t) >= 0 && t <= ExactNumber(Rational(1, 2)); }

ExactNumber shiftedValue(const Family& fam, const Point& p, const Shift& s) {
  ExactNumber a = p.x + ExactNumber(r64(s.u));
  ExactNumber b = p.y + ExactNumber(r64(s.v));
  return a * a - b * b * Rational(fam.m);
}

bool onLocus(const Family& fam, const Locus& l, const Point& p) {
  switch (l.kind) {
    case Locus::Kind::kBranch: return onBranch(fam, l.branch, p);
    case Locus::Kind::kVertical: return p.x == ExactNumber(l.c);
    case Locus::Kind::kHorizontal: return p.y == ExactNumber(l.c);
  }
  return false;
}

// Recomputes the intersection of two loci and reports whether p is among the results.
bool recomputed(const Family& fam, const Locus& a, const Locus& b, const Point& p) {
  using K = Locus::Kind;
  auto contains = [&](const std::vector<Point>& pts) { return std::find(pts.begin(), pts.end(), p) != pts.end(); };
  if (a.kind == K::kBranch && b.kind == K::kBranch) {
    if (a.branch == b.branch) return onBranch(fam, a.branch, p);
    return contains(intersect(fam, a.branch, b.branch));
  }
  if (a.kind == K::kBranch || b.kind == K::kBranch) {
    const Locus& br = a.kind == K::kBranch ? a : b;
    const Locus& line = a.kind == K::kBranch ? b : a;
    return contains(intersectLine(fam, br.branch, line.kind == K::kVertical ? Axis::kX : Axis::kY, line.c));
  }
  if (a.kind == b.kind) return a.c == b.c && onLocus(fam, a, p);
  const Locus& v = a.kind == K::kVertical ? a : b;
  const Locus& h = a.kind == K::kVertical ? b : a;
  return p == Point{ExactNumber(v.c), ExactNumber(h.c)};
}

CheckResult checkPoint(const Certificate& cert, const CertPoint& p) {
  const Family fam = cert.family();
  CheckResult r{"point", pointName(p), false, ""};
  if (!inUnitHalf(p.at.x) || !inUnitHalf(p.at.y)) {
    r.detail = "(" + p.at.x.str() + ", " + p.at.y.str() + ") lies outside S0";
    return r;
  }
  for (const Locus& l : p.on) {
    if (!onLocus(fam, l, p.at)) {
      r.detail = "not on " + l.str();
      return r;
    }
  }
  try {
    if (p.on.size() >= 2 && !recomputed(fam, p.on[0], p.on[1], p.at)) {
      r.detail = "not among the recomputed intersections of " + p.on[0].str() + " and " + p.on[1].str();
      return r;
    }
  } catch (const std::exception& e) {
    r.detail = std::string("intersection failed: ") + e.what();
    return r;
  }
  if (p.isCritical()) {
    const ExactNumber M(cert.M);
    bool attained = false;
    for (const Shift& s : cert.pairs) {
      ExactNumber val = shiftedValue(fam, p.at, s);
      int below = signOf(M - val);
      int above = signOf(M + val);
      if (below < 0 || above < 0) continue;  // |val| > M, not covering
      if (below > 0 && above > 0) {
        r.detail = "covered strictly by (" + std::to_string(s.u) + "," + std::to_string(s.v) + "), not critical";
        return r;
      }
      attained = true;
    }
    if (!attained) {
      r.detail = "no certificate pair attains |f| = M";
      return r;
    }
  }
  r.passed = true;
  return r;
}

CheckResult checkClaim(const Certificate& cert, std::size_t index, const Claim& c) {
  CheckResult r{"claim", claimName(index, c), false, ""};
  DominanceProof proof;
  try {
    proof = compare(cert.family(), c.lhsCurve(), c.rhsCurve(), c.on, c.direction());
  } catch (const std::exception& e) {
    r.detail = e.what();
    return r;
  }
  std::string found = (proof.reduced ? proof.reduced->str() : std::string("none")) + " case " +
                      std::string(toString(proof.verdict.label));
  if (!proof.holds) {
    r.detail = "does not hold: " + proof.failure + " (recomputed " + found + ")";
    return r;
  }
  bool poly_ok = proof.reduced && c.poly ? positivelyProportional(*proof.reduced, *c.poly)
                                         : !proof.reduced && !c.poly;
  if (!poly_ok) {
    r.detail = "polynomial mismatch: certificate has " + (c.poly ? c.poly->str() : std::string("none")) +
               ", recomputed " + found;
    return r;
  }
  if (proof.verdict.label != c.label) {
    r.detail = "case mismatch: certificate has " + std::string(toString(c.label)) + ", recomputed " + found;
    return r;
  }
  r.passed = true;
  r.detail = found;
  return r;
}

CheckResult checkBoundary(const Certificate& cert, const Region& region) {
  const Family fam = cert.family();
  CheckResult r{"boundary", regionName(region), false, ""};
  std::vector<detail::Edge> edges;
  try {
    edges = detail::regionEdges(cert, region);
  } catch (const CertificateError& e) {
    r.detail = e.what();
    return r;
  }
  for (const detail::Edge& e : edges) {
    const Point& a = e.from->at;
    const Point& b = e.to->at;
    std::string name = pointName(*e.from) + "-" + pointName(*e.to);
    if (!e.arc) {
      if (a.x != b.x && a.y != b.y) {
        r.detail = "straight edge " + name + " is not axis-aligned";
        return r;
      }
      continue;
    }
    const Branch& br = *e.arc;
    if (!onBranch(fam, br, a) || !onBranch(fam, br, b)) {
      r.detail = "edge " + name + " endpoints are not on " + toString(br);
      return r;
    }
    int dx = signOf(b.x - a.x);
    if (dx == 0) {
      r.detail = "arc " + name + " has no horizontal extent";
      return r;
    }
    Interval span = dx > 0 ? Interval(a.x, b.x) : Interval(b.x, a.x);
    if (!domain(fam, br, span)) {
      r.detail = toString(br) + " is undefined on part of " + ivText(span);
      return r;
    }
    int dy = signOf(b.y - a.y);
    if (dy != monotoneDirection(br) * dx) {
      r.detail = "arc " + name + " runs against the monotonicity of " + toString(br);
      return r;
    }
  }
  r.passed = true;
  return r;
}

// Discharges hi >= lo on iv; `bound` is the owner branch involved, if any.
class Discharger {
 public:
  Discharger(const Certificate& cert, const std::vector<bool>& claim_ok, VerifyOptions options)
      : cert_(cert), fam_(cert.family()), claim_ok_(claim_ok), options_(options) {}

  bool run(const Curve& hi, const Curve& lo, const Interval& iv, const Branch* bound, std::string& why) {
    if (hi == lo) {
      ++identical;
      return true;
    }
    if (!hi.isBranch() && !lo.isBranch()) {
      if (hi.level() >= lo.level()) return true;
      why = hi.str() + " < " + lo.str();
      return false;
    }
    std::vector<Interval> pieces = bound ? detail::constrainedPieces(fam_, *bound, iv) : std::vector<Interval>{iv};
    if (pieces.empty()) {
      ++vacuous;
      return true;
    }
    if (pieces.size() != 1 || !(pieces.front() == iv)) ++vacuous;
    for (const Interval& piece : pieces) {
      if (byClaims(hi, lo, piece)) {
        ++claimed;
        continue;
      }
      if (!options_.deriveMissing) {
        why = hi.str() + " >= " + lo.str() + " on " + ivText(piece) + " has no certificate claim";
        return false;
      }
      DominanceProof proof = detail::tryCompare(fam_, hi, lo, piece);
      if (!proof.holds) {
        why = hi.str() + " >= " + lo.str() + " on " + ivText(piece) + " fails: " + proof.failure;
        return false;
      }
      ++derived;
      if (sink != nullptr) {
        if (auto c = detail::claimFor(hi, lo, piece, proof)) sink->push_back(std::move(*c));
      }
    }
    return true;
  }

  std::size_t identical = 0, vacuous = 0, claimed = 0, derived = 0;
  std::vector<Claim>* sink = nullptr;  // receives a claim for every derived comparison

 private:
  bool matches(const Claim& c, const Curve& hi, const Curve& lo) const {
    switch (c.kind) {
      case ClaimKind::kGeq: return hi == Curve(c.lhs) && lo == Curve(c.rhs);
      case ClaimKind::kGeqc: return hi == Curve(c.lhs) && !lo.isBranch() && lo.level() == c.level;
      case ClaimKind::kLeqc: return lo == Curve(c.lhs) && !hi.isBranch() && hi.level() == c.level;
    }
    return false;
  }

  // True when verified claims for this pair of curves jointly cover iv.
  bool byClaims(const Curve& hi, const Curve& lo, const Interval& iv) const {
    std::vector<const Interval*> usable;
    for (std::size_t i = 0; i < cert_.claims.size(); ++i) {
      if (claim_ok_[i] && matches(cert_.claims[i], hi, lo)) usable.push_back(&cert_.claims[i].on);
    }
    ExactNumber reached = iv.lo;
    bool first = true;
    while (first || reached < iv.hi) {
      first = false;
      std::optional<ExactNumber> best;
      for (const Interval* on : usable) {
        if (on->lo <= reached && reached <= on->hi && (!best || *best < on->hi)) best = on->hi;
      }
      if (!best || (*best == reached && reached < iv.hi)) return false;
      reached = *best;
    }
    return true;
  }

  const Certificate& cert_;
  Family fam_;
  const std::vector<bool>& claim_ok_;
  VerifyOptions options_;
};

CheckResult checkCoverage(const Certificate& cert, const Region& region, const std::vector<bool>& claim_ok,
                          VerifyOptions options, std::vector<Claim>* sink = nullptr) {
  CheckResult r{"coverage", regionName(region), false, ""};
  std::vector<Slab> slabs;
  try {
    slabs = regionSlabs(cert, region);
  } catch (const CertificateError& e) {
    r.detail = e.what();
    return r;
  }
  Branch upper = upperBranch(region.owner);
  Branch lower = lowerBranch(region.owner);
  Discharger d(cert, claim_ok, options);
  d.sink = sink;
  for (const Slab& s : slabs) {
    std::string why;
    bool ok = d.run(s.top, s.bottom, s.x, nullptr, why) && d.run(Curve(upper), s.top, s.x, &upper, why) &&
              d.run(s.bottom, Curve(lower), s.x, &lower, why);
    if (!ok) {
      r.detail = "slab " + ivText(s.x) + ": " + why;
      return r;
    }
  }
  std::ostringstream detail;
  detail << slabs.size() << " slab(s): " << d.claimed << " by claims, " << d.vacuous << " vacuous, " << d.identical
         << " identical, " << d.derived << " derived";
  r.passed = true;
  r.detail = detail.str();
  return r;
}

// Boundary edges collected on their supporting curve, parametrised by x (or y for verticals).
struct CarrierEdges {
  std::string name;
  bool vertical = false;
  ExactNumber level;  // constant coordinate of a straight carrier
  bool straight = false;
  std::vector<std::pair<Interval, int>> pieces;  // parameter range and direction (+1 / -1)
};

std::vector<CheckResult> checkTiling(const Certificate& cert) {
  std::map<std::string, CarrierEdges> carriers;
  for (const Region& region : cert.regions) {
    std::vector<detail::Edge> edges;
    try {
      edges = detail::regionEdges(cert, region);
    } catch (const CertificateError&) {
      continue;  // already reported by the boundary check
    }
    for (const detail::Edge& e : edges) {
      const Point& a = e.from->at;
      const Point& b = e.to->at;
      if (a == b) continue;
      CarrierEdges probe;
      ExactNumber s, t;
      if (e.arc) {
        probe.name = toString(*e.arc);
        s = a.x;
        t = b.x;
      } else if (a.x == b.x) {
        probe.name = "x=" + a.x.str();
        probe.vertical = probe.straight = true;
        probe.level = a.x;
        s = a.y;
        t = b.y;
      } else if (a.y == b.y) {
        probe.name = "y=" + a.y.str();
        probe.straight = true;
        probe.level = a.y;
        s = a.x;
        t = b.x;
      } else {
        continue;  // reported by the boundary check
      }
      auto [it, inserted] = carriers.try_emplace(probe.name, probe);
      int dir = s < t ? 1 : -1;
      it->second.pieces.push_back({dir > 0 ? Interval(s, t) : Interval(t, s), dir});
    }
  }

  const ExactNumber zero(0L);
  const ExactNumber half(Rational(1, 2));
  for (const char* side : {"y=0", "x=1/2", "y=1/2", "x=0"}) {
    std::string name(side);
    if (carriers.count(name)) continue;
    CarrierEdges c;
    c.name = name;
    c.straight = true;
    c.vertical = name.front() == 'x';
    c.level = name.back() == '0' ? zero : half;
    carriers.emplace(name, c);
  }

  std::vector<CheckResult> out;
  for (const auto& [name, c] : carriers) {
    CheckResult r{"tiling", name, true, ""};
    // Sides of S0 must be traversed once counter-clockwise: right along y=0, up along x=1/2.
    int expected = 0;
    if (c.straight && (c.level == zero || c.level == half)) {
      bool low = c.level == zero;
      expected = c.vertical ? (low ? -1 : 1) : (low ? 1 : -1);
    }
    std::vector<ExactNumber> cuts;
    for (const auto& [iv, dir] : c.pieces) {
      cuts.push_back(iv.lo);
      cuts.push_back(iv.hi);
    }
    if (expected != 0) {
      cuts.push_back(zero);
      cuts.push_back(half);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size() && r.passed; ++i) {
      int forward = 0;
      int backward = 0;
      for (const auto& [iv, dir] : c.pieces) {
        if (iv.lo <= cuts[i] && cuts[i + 1] <= iv.hi) ++(dir > 0 ? forward : backward);
      }
      bool inside = zero <= cuts[i] && cuts[i + 1] <= half;
      bool ok;
      if (expected != 0 && inside) {
        ok = expected > 0 ? (forward == 1 && backward == 0) : (forward == 0 && backward == 1);
      } else if (expected != 0) {
        ok = forward == 0 && backward == 0;
      } else {
        ok = forward == backward && forward <= 1;
      }
      if (!ok) {
        r.passed = false;
        r.detail = "piece [" + cuts[i].str() + ", " + cuts[i + 1].str() + "] traversed " + std::to_string(forward) +
                   " time(s) forward and " + std::to_string(backward) + " backward";
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

bool VerificationReport::ok() const {
  return !results.empty() && std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; }));
}

std::string VerificationReport::str() const {
  std::ostringstream out;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.check << " " << r.subject;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
  }
  out << (ok() ? "verified" : "NOT verified") << " (" << results.size() << " checks, " << failures()
      << " failure(s))\n";
  return out.str();
}

VerificationReport verify(const Certificate& cert, VerifyOptions options) {
  VerificationReport report;
  for (const CertPoint& p : cert.points) report.results.push_back(checkPoint(cert, p));

  std::vector<bool> claim_ok;
  for (std::size_t i = 0; i < cert.claims.size(); ++i) {
    report.results.push_back(checkClaim(cert, i, cert.claims[i]));
    claim_ok.push_back(report.results.back().passed);
  }

  if (cert.regions.empty()) report.results.push_back({"boundary", "certificate", false, "no regions"});
  for (const Region& region : cert.regions) {
    report.results.push_back(checkBoundary(cert, region));
    if (std::find(cert.pairs.begin(), cert.pairs.end(), region.owner) == cert.pairs.end()) {
      report.results.push_back({"boundary", regionName(region), false, "owner is not a listed pair"});
    }
  }
  for (const Region& region : cert.regions) report.results.push_back(checkCoverage(cert, region, claim_ok, options));
  for (CheckResult& r : checkTiling(cert)) report.results.push_back(std::move(r));
  return report;
}

Certificate completeClaims(const Certificate& cert) {
  std::vector<bool> claim_ok;
  for (std::size_t i = 0; i < cert.claims.size(); ++i) claim_ok.push_back(checkClaim(cert, i, cert.claims[i]).passed);
  std::vector<Claim> found;
  for (const Region& region : cert.regions) checkCoverage(cert, region, claim_ok, {}, &found);
  Certificate out = cert;
  for (Claim& c : found) {
    if (std::find(out.claims.begin(), out.claims.end(), c) == out.claims.end()) out.claims.push_back(std::move(c));
  }
  return out;
}

}  // namespace qeuclid
