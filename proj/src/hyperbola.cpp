#include "qeuclid/hyperbola.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qeuclid {

namespace {

Rational r64(std::int64_t n) { return Rational(static_cast<long>(n)); }

// Sums of c_S(a) * sqrt(prod_{i in S} R_i(a)) over subsets S of a fixed list of radicand
// polynomials R_i, with S stored as a bit mask.
class RadicalSum {
 public:
  explicit RadicalSum(const std::vector<Poly>* base) : base_(base) {}

  void add(unsigned mask, const Poly& c) {
    Poly& slot = terms_[mask];
    slot = slot + c;
    if (slot.isZero()) terms_.erase(mask);
  }

  std::size_t radicalCount() const {
    std::size_t n = 0;
    for (const auto& [mask, c] : terms_) n += mask != 0 ? 1 : 0;
    return n;
  }

  const std::map<unsigned, Poly>& terms() const { return terms_; }

  Poly rationalPart() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Poly() : it->second;
  }

  RadicalSum times(const RadicalSum& other) const {
    RadicalSum out(base_);
    for (const auto& [m1, c1] : terms_) {
      for (const auto& [m2, c2] : other.terms_) {
        Poly c = c1 * c2;
        unsigned common = m1 & m2;
        for (std::size_t i = 0; i < base_->size(); ++i) {
          if ((common >> i) & 1U) c = c * (*base_)[i];
        }
        out.add(m1 ^ m2, c);
      }
    }
    return out;
  }

  RadicalSum minus(const RadicalSum& other) const {
    RadicalSum out = *this;
    for (const auto& [mask, c] : other.terms_) out.add(mask, -c);
    return out;
  }

 private:
  const std::vector<Poly>* base_;
  std::map<unsigned, Poly> terms_;
};

Sign strictOrWeak(bool strict, int s) {
  if (s > 0) return strict ? Sign::kPositive : Sign::kNonNegative;
  return strict ? Sign::kNegative : Sign::kNonPositive;
}

bool inHalfUnit(const ExactNumber& t) { return signOf(t) >= 0 && cmp(t, ExactNumber(Rational(1, 2))) <= 0; }

// Real roots of a polynomial of degree <= 2 (throws if it is identically zero).
std::vector<ExactNumber> quadraticRoots(const Poly& q) {
  if (q.isZero()) throw std::logic_error("coincident curves have no isolated intersection");
  if (q.degree() == 0) return {};
  if (q.degree() == 1) return {ExactNumber(Rational(-q.coeff(0) / q.coeff(1)))};
  Rational alpha = q.coeff(2);
  Rational beta = q.coeff(1);
  Rational disc = beta * beta - 4 * alpha * q.coeff(0);
  if (sgn(disc) < 0) return {};
  if (sgn(disc) == 0) return {ExactNumber(Rational(-beta / (2 * alpha)))};
  ExactNumber sq = ExactNumber::sqrt(disc);
  return {(ExactNumber(-beta) - sq) / (2 * alpha), (ExactNumber(-beta) + sq) / (2 * alpha)};
}

}  // namespace

Curve Curve::constant(const Rational& c) {
  Curve out;
  out.level_ = c;
  return out;
}

std::string toString(const Branch& b) {
  return "B[" + std::to_string(b.u) + "," + std::to_string(b.v) + "," + std::to_string(b.theta) + "," +
         std::to_string(b.epsilon) + "]";
}

std::string Curve::str() const { return isBranch() ? toString(*branch_) : level_.get_str(); }

Branch parseBranch(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("expected B[u,v,theta,epsilon], got '" + std::string(text) + "'"); };
  if (text.size() < 4 || text.substr(0, 2) != "B[" || text.back() != ']') throw fail();
  std::string body(text.substr(2, text.size() - 3));
  std::vector<long long> values;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string field = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(field, &used));
      if (used != field.size()) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != 4 || (values[2] != 1 && values[2] != -1) || (values[3] != 1 && values[3] != -1)) throw fail();
  return {values[0], values[1], static_cast<int>(values[2]), static_cast<int>(values[3])};
}

Branch upperBranch(const Shift& s) { return s.v >= 0 ? Branch{s.u, s.v, 1, -1} : Branch{s.u, s.v, -1, 1}; }
Branch lowerBranch(const Shift& s) { return s.v >= 0 ? Branch{s.u, s.v, 1, 1} : Branch{s.u, s.v, -1, -1}; }

Poly radicand(const Family& fam, const Branch& b) {
  Rational u = r64(b.u);
  Poly shifted(std::vector<Rational>{u, 1});
  return (shifted * shifted - Poly(Rational(b.epsilon * fam.M))) * Rational(1, fam.m);
}

bool domain(const Family& fam, const Branch& b, const Interval& iv) {
  return polySignOnInterval(radicand(fam, b), iv).nonNegative();
}

int monotoneDirection(const Branch& b) { return (b.u >= 0 ? 1 : -1) * b.theta; }

ExactNumber evalAt(const Family& fam, const Curve& c, const ExactNumber& a) {
  if (!c.isBranch()) return ExactNumber(c.level());
  const Branch& b = c.branch();
  ExactNumber r = radicand(fam, b).eval(a);
  if (signOf(r) < 0) throw std::domain_error(toString(b) + " is undefined at a = " + a.str());
  std::optional<ExactNumber> root = sqrtExact(r);
  if (!root) throw std::domain_error(toString(b) + " at a = " + a.str() + " does not denest");
  return ExactNumber(r64(-b.v)) + *root * Rational(b.theta);
}

bool onBranch(const Family& fam, const Branch& b, const Point& p) {
  ExactNumber s = p.y + ExactNumber(r64(b.v));
  if (signOf(s) * b.theta < 0) return false;
  return s * s == radicand(fam, b).eval(p.x);
}

std::vector<Point> intersect(const Family& fam, const Branch& b1, const Branch& b2) {
  if (b1 == b2) throw std::invalid_argument("intersect of a branch with itself");
  Poly r1 = radicand(fam, b1);
  Poly r2 = radicand(fam, b2);
  std::vector<Point> candidates;
  if (b1.v == b2.v) {
    Poly diff = r1 - r2;
    if (diff.isZero()) {
      // Same radicand, opposite theta: the branches meet where the radicand vanishes.
      for (const ExactNumber& a : quadraticRoots(r1)) candidates.push_back({a, ExactNumber(r64(-b1.v))});
    } else {
      for (const ExactNumber& a : quadraticRoots(diff)) {
        if (signOf(r1.eval(a)) < 0) continue;
        candidates.push_back({a, evalAt(fam, Curve(b1), a)});
      }
    }
  } else {
    // With s_i = b + v_i: s1 - s2 = d and s1^2 - s2^2 = r1 - r2, so s1 is linear in a.
    Rational d = r64(b1.v - b2.v);
    Poly s1 = ((r1 - r2) * Rational(1 / d) + Poly(d)) * Rational(1, 2);
    for (const ExactNumber& a : quadraticRoots(s1 * s1 - r1)) {
      ExactNumber y = s1.eval(a) - ExactNumber(r64(b1.v));
      candidates.push_back({a, y});
    }
  }
  std::vector<Point> out;
  for (const Point& p : candidates) {
    if (!inHalfUnit(p.x)) continue;
    if (!onBranch(fam, b1, p) || !onBranch(fam, b2, p)) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::vector<Point> intersectLine(const Family& fam, const Branch& b, Axis axis, const Rational& c) {
  std::vector<Point> out;
  if (axis == Axis::kX) {
    ExactNumber x(c);
    if (!inHalfUnit(x) || signOf(radicand(fam, b).eval(x)) < 0) return out;
    Point p{x, evalAt(fam, Curve(b), x)};
    if (inHalfUnit(p.y)) out.push_back(p);
    return out;
  }
  Rational s = c + r64(b.v);
  if (sgn(s) * b.theta < 0) return out;
  Rational k = fam.m * s * s + b.epsilon * fam.M;  // (a+u)^2
  if (sgn(k) < 0) return out;
  ExactNumber root = ExactNumber::sqrt(k);
  for (const ExactNumber& a : {ExactNumber(r64(-b.u)) - root, ExactNumber(r64(-b.u)) + root}) {
    Point p{a, ExactNumber(c)};
    if (inHalfUnit(p.x) && inHalfUnit(p.y) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

DominanceProof compare(const Family& fam, const Curve& lhs, const Curve& rhs, const Interval& iv, Direction dir) {
  DominanceProof proof;
  std::vector<Poly> base;
  auto indexOf = [&](const Poly& r) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base[i] == r) return i;
    }
    base.push_back(r);
    return base.size() - 1;
  };
  for (const Curve* c : {&lhs, &rhs}) {
    if (!c->isBranch()) continue;
    if (!domain(fam, c->branch(), iv)) {
      throw std::domain_error(c->str() + " is not defined on all of [" + iv.lo.str() + ", " + iv.hi.str() + "]");
    }
    indexOf(radicand(fam, c->branch()));
  }

  RadicalSum e(&base);
  auto addCurve = [&](const Curve& c, int sign) {
    if (!c.isBranch()) {
      e.add(0, Poly(c.level() * sign));
      return;
    }
    const Branch& b = c.branch();
    e.add(0, Poly(r64(-b.v) * sign));
    e.add(1U << indexOf(radicand(fam, b)), Poly(Rational(b.theta * sign)));
  };
  addCurve(lhs, 1);
  addCurve(rhs, -1);

  for (int round = 0;; ++round) {
    if (e.radicalCount() == 0) {
      Poly f = e.rationalPart();
      proof.reduced = f.primitive();
      proof.verdict = polySignOnInterval(f, iv);
      break;
    }
    if (round > 8) {
      proof.failure = "radical elimination did not terminate";
      return proof;
    }
    RadicalSum positive(&base);
    RadicalSum negative(&base);
    bool strict = false;
    for (const auto& [mask, c] : e.terms()) {
      SignVerdict v = polySignOnInterval(c, iv);
      proof.sideConditions.push_back({c, v});
      if (v.sign == Sign::kMixed) {
        proof.failure = "coefficient " + c.str() + " changes sign on the interval";
        return proof;
      }
      if (v.sign == Sign::kZero) continue;
      if (mask == 0 && (v.sign == Sign::kPositive || v.sign == Sign::kNegative)) strict = true;
      if (v.nonNegative()) {
        positive.add(mask, c);
      } else {
        negative.add(mask, -c);
      }
    }
    if (negative.terms().empty() || positive.terms().empty()) {
      int s = negative.terms().empty() ? 1 : -1;
      if (positive.terms().empty() && negative.terms().empty()) {
        proof.verdict = {Sign::kZero, CaseLabel::kSigns};
      } else {
        proof.verdict = {strictOrWeak(strict, s), CaseLabel::kSigns};
      }
      break;
    }
    // (P - N)(P + N) keeps the sign of P - N because P + N > 0 wherever P - N != 0.
    RadicalSum next = positive.times(positive).minus(negative.times(negative));
    if (next.radicalCount() >= e.radicalCount()) {
      proof.failure = "squaring did not reduce the number of radicals";
      return proof;
    }
    e = next;
  }
  proof.holds = dir == Direction::kGeq ? proof.verdict.nonNegative() : proof.verdict.nonPositive();
  if (!proof.holds) proof.failure = "reduced polynomial has the wrong sign on the interval";
  return proof;
}

}  // namespace qeuclid
