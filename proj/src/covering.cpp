#include "qeuclid/covering.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "covering_internal.hpp"

namespace qeuclid {

namespace {

Rational r64(std::int64_t n) { return Rational(static_cast<long>(n)); }

bool fitsInt64(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62; }

__int128 toI128(const Integer& z) { return static_cast<__int128>(z.get_si()); }

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

}  // namespace

std::vector<Shift> coverSet(const Family& fam, const RationalPoint& p, std::int64_t bound) {
  // Over the common denominator D the test is q |(A + uD)^2 - m (B + vD)^2| <= p D^2.
  Integer D = lcm(p.x.get_den(), p.y.get_den());
  Integer A = p.x.get_num() * (D / p.x.get_den());
  Integer B = p.y.get_num() * (D / p.y.get_den());
  const Integer& Mp = fam.M.get_num();
  const Integer& Mq = fam.M.get_den();
  Integer reach = (abs(A) > abs(B) ? Integer(abs(A)) : Integer(abs(B))) + Integer(static_cast<long>(bound)) * D;
  std::size_t bits = 2 * mpz_sizeinbase(reach.get_mpz_t(), 2) + mpz_sizeinbase(Integer(fam.m).get_mpz_t(), 2) +
                     mpz_sizeinbase(Mq.get_mpz_t(), 2) + 2;
  std::size_t rhs_bits = mpz_sizeinbase(Mp.get_mpz_t(), 2) + 2 * mpz_sizeinbase(D.get_mpz_t(), 2);

  std::vector<Shift> out;
  if (bits <= 124 && rhs_bits <= 124 && fitsInt64(reach)) {
    const __int128 a = toI128(A), b = toI128(B), d = toI128(D), q = toI128(Mq), m = fam.m;
    const __int128 limit = toI128(Mp) * d * d;
    for (std::int64_t u = -bound; u <= bound; ++u) {
      __int128 X = a + u * d;
      __int128 X2 = X * X;
      for (std::int64_t v = -bound; v <= bound; ++v) {
        __int128 Y = b + v * d;
        if (q * abs128(X2 - m * Y * Y) <= limit) out.push_back({u, v});
      }
    }
    return out;
  }
  const Integer limit = Mp * D * D;
  for (std::int64_t u = -bound; u <= bound; ++u) {
    Integer X = A + Integer(static_cast<long>(u)) * D;
    Integer X2 = X * X;
    for (std::int64_t v = -bound; v <= bound; ++v) {
      Integer Y = B + Integer(static_cast<long>(v)) * D;
      Integer val = X2 - fam.m * Y * Y;
      if (Mq * abs(val) <= limit) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<Shift> coverSetExact(const Family& fam, const Point& p, std::int64_t bound) {
  if (p.x.isRational() && p.y.isRational()) return coverSet(fam, {p.x.rationalPart(), p.y.rationalPart()}, bound);
  // Candidate v come from floating enclosures padded by one unit on each side, so they are a
  // superset; membership itself is decided on exact values.
  RationalInterval ex = enclose(p.x, 64);
  RationalInterval ey = enclose(p.y, 64);
  const double xlo = ex.lo.get_d(), xhi = ex.hi.get_d(), ylo = ey.lo.get_d(), yhi = ey.hi.get_d();
  const double M = fam.M.get_d();
  const double m = fam.m;
  const ExactNumber fxy = p.x * p.x - p.y * p.y * Rational(fam.m);
  const ExactNumber Me(fam.M);

  std::vector<Shift> out;
  for (std::int64_t u = -bound; u <= bound; ++u) {
    double lo = xlo + static_cast<double>(u), hi = xhi + static_cast<double>(u);
    double sq_min = (lo <= 0 && hi >= 0) ? 0.0 : std::min(lo * lo, hi * hi);
    double sq_max = std::max(lo * lo, hi * hi);
    double r_hi = std::sqrt((sq_max + M) / m);
    double r_lo = std::sqrt(std::max(0.0, sq_min - M) / m);
    std::set<std::int64_t> candidates;
    auto addRange = [&](double from, double to) {
      auto first = static_cast<std::int64_t>(std::max(std::floor(from) - 1, static_cast<double>(-bound)));
      auto last = static_cast<std::int64_t>(std::min(std::ceil(to) + 1, static_cast<double>(bound)));
      for (std::int64_t v = first; v <= last; ++v) candidates.insert(v);
    };
    addRange(-yhi - r_hi, -ylo - r_lo);
    addRange(-yhi + r_lo, -ylo + r_hi);
    for (std::int64_t v : candidates) {
      Rational fuv = r64(u) * r64(u) - fam.m * r64(v) * r64(v);
      ExactNumber val = fxy + ExactNumber(fuv) + p.x * Rational(2 * r64(u)) - p.y * Rational(2 * fam.m * r64(v));
      if (signOf(Me - val) >= 0 && signOf(Me + val) >= 0) out.push_back({u, v});
    }
  }
  return out;
}

namespace detail {

std::vector<Edge> regionEdges(const Certificate& cert, const Region& region) {
  struct Step {
    const CertPoint* point;
    std::optional<Branch> arcAfter;
  };
  std::vector<Step> steps;
  std::optional<Branch> leading_arc;
  for (const RegionItem& item : region.items) {
    if (item.isArc) {
      std::optional<Branch>& slot = steps.empty() ? leading_arc : steps.back().arcAfter;
      if (slot) throw CertificateError("two arcs in a row without a point between them");
      slot = item.arc;
      continue;
    }
    const CertPoint* p = cert.findPoint(item.label);
    if (p == nullptr) throw CertificateError("dangling point label '" + item.label + "'");
    steps.push_back({p, std::nullopt});
  }
  // A boundary may repeat its first point at the end to close itself.
  if (steps.size() > 1 && steps.back().point == steps.front().point && !steps.back().arcAfter && !leading_arc) {
    steps.pop_back();
  }
  if (leading_arc) {
    if (steps.empty() || steps.back().arcAfter) throw CertificateError("arc without endpoints");
    steps.back().arcAfter = leading_arc;
  }
  if (steps.size() < 2) throw CertificateError("region boundary needs at least two points");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    edges.push_back({s.point, steps[(i + 1) % steps.size()].point, s.arcAfter});
  }
  return edges;
}

std::vector<Interval> constrainedPieces(const Family& fam, const Branch& bound, const Interval& iv) {
  if (bound.epsilon < 0) return {iv};
  SignVerdict v = polySignOnInterval(radicand(fam, bound), iv);
  if (v.nonPositive()) return {};
  if (v.sign != Sign::kMixed) return {iv};
  // The radicand (a+u)^2 - M is <= 0 exactly on [-u - sqrt M, -u + sqrt M].
  ExactNumber root = ExactNumber::sqrt(fam.M);
  ExactNumber left = ExactNumber(r64(-bound.u)) - root;
  ExactNumber right = ExactNumber(r64(-bound.u)) + root;
  std::vector<Interval> out;
  if (iv.lo < left) out.emplace_back(iv.lo, std::min(iv.hi, left));
  if (right < iv.hi) out.emplace_back(std::max(iv.lo, right), iv.hi);
  return out;
}

std::optional<Claim> claimFor(const Curve& hi, const Curve& lo, const Interval& iv, const DominanceProof& proof) {
  Claim c;
  if (hi.isBranch() && lo.isBranch()) {
    c.kind = ClaimKind::kGeq;
    c.lhs = hi.branch();
    c.rhs = lo.branch();
  } else if (hi.isBranch()) {
    c.kind = ClaimKind::kGeqc;
    c.lhs = hi.branch();
    c.level = lo.level();
  } else if (lo.isBranch()) {
    c.kind = ClaimKind::kLeqc;
    c.lhs = lo.branch();
    c.level = hi.level();
  } else {
    return std::nullopt;
  }
  c.on = iv;
  // leqc states lhs <= level, so its polynomial is oriented as lo - hi.
  if (proof.reduced) c.poly = c.kind == ClaimKind::kLeqc ? -*proof.reduced : *proof.reduced;
  c.label = proof.verdict.label;
  return c;
}

DominanceProof tryCompare(const Family& fam, const Curve& hi, const Curve& lo, const Interval& iv) {
  try {
    return compare(fam, hi, lo, iv, Direction::kGeq);
  } catch (const std::domain_error& e) {
    DominanceProof failed;
    failed.failure = e.what();
    return failed;
  }
}

}  // namespace detail

std::vector<Slab> regionSlabs(const Certificate& cert, const Region& region) {
  std::vector<detail::Edge> edges = detail::regionEdges(cert, region);
  std::vector<ExactNumber> xs;
  for (const detail::Edge& e : edges) xs.push_back(e.from->at.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 2) throw CertificateError("region has no width");

  auto carrier = [](const detail::Edge& e) -> Curve {
    if (e.arc) return Curve(*e.arc);
    if (e.from->at.y != e.to->at.y) {
      throw CertificateError("straight edge P" + e.from->label + "-P" + e.to->label + " is not axis-aligned");
    }
    if (!e.from->at.y.isRational()) throw CertificateError("horizontal edge at an irrational height");
    return Curve::constant(e.from->at.y.rationalPart());
  };

  std::vector<Slab> slabs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const ExactNumber& lo = xs[i];
    const ExactNumber& hi = xs[i + 1];
    std::vector<Curve> bottoms, tops;
    for (const detail::Edge& e : edges) {
      const ExactNumber& a = e.from->at.x;
      const ExactNumber& b = e.to->at.x;
      if (a == b) {
        if (e.arc) throw CertificateError("arc " + toString(*e.arc) + " has equal endpoint abscissae");
        continue;
      }
      bool rightward = a < b;
      const ExactNumber& left = rightward ? a : b;
      const ExactNumber& right = rightward ? b : a;
      if (left <= lo && hi <= right) (rightward ? bottoms : tops).push_back(carrier(e));
    }
    if (bottoms.size() != 1 || tops.size() != 1) {
      throw CertificateError("region is not x-monotone and counter-clockwise over [" + lo.str() + ", " + hi.str() +
                             "]");
    }
    slabs.push_back({Interval(lo, hi), bottoms.front(), tops.front()});
  }
  return slabs;
}

}  // namespace qeuclid
