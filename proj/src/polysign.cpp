#include "qeuclid/polysign.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace qeuclid {

namespace {

constexpr std::array<std::pair<CaseLabel, std::string_view>, 12> kLabelNames{{
    {CaseLabel::kMinus, "minus"},
    {CaseLabel::kZero, "zero"},
    {CaseLabel::kA1, "a1"},
    {CaseLabel::kA2, "a2"},
    {CaseLabel::kB, "b"},
    {CaseLabel::kC, "c"},
    {CaseLabel::kD, "d"},
    {CaseLabel::kE, "e"},
    {CaseLabel::kLinear, "linear"},
    {CaseLabel::kConstant, "constant"},
    {CaseLabel::kSturm, "sturm"},
    {CaseLabel::kSigns, "signs"},
}};

// Constant-sign verdict: `s` is the sign away from zeros, `touches` whether a zero lies in
// the interval, `point` whether the interval is a single point.
Sign constantSign(int s, bool touches, bool point) {
  if (touches && point) return Sign::kZero;
  if (s > 0) return touches ? Sign::kNonNegative : Sign::kPositive;
  if (s < 0) return touches ? Sign::kNonPositive : Sign::kNegative;
  return Sign::kZero;
}

SignVerdict linearSign(const Poly& p, const Interval& iv) {
  int s_lo = signOf(p.eval(iv.lo));
  int s_hi = signOf(p.eval(iv.hi));
  if (s_lo * s_hi < 0) return {Sign::kMixed, CaseLabel::kLinear};
  if (s_lo == 0 && s_hi == 0) return {Sign::kZero, CaseLabel::kLinear};
  int s = s_lo != 0 ? s_lo : s_hi;
  return {constantSign(s, s_lo == 0 || s_hi == 0, false), CaseLabel::kLinear};
}

std::vector<Poly> sturmSequence(const Poly& q) {
  std::vector<Poly> seq{q, q.derivative()};
  while (!seq.back().isZero() && seq.back().degree() > 0) {
    Poly r = Poly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.isZero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int variations(const std::vector<Poly>& seq, const ExactNumber& x) {
  int count = 0;
  int previous = 0;
  for (const Poly& s : seq) {
    int current = signOf(s.eval(x));
    if (current == 0) continue;
    if (previous != 0 && current != previous) ++count;
    previous = current;
  }
  return count;
}

// Distinct roots of the squarefree q in (lo, hi].
int rootsHalfOpen(const Poly& q, const Interval& iv) {
  if (q.degree() <= 0) return 0;
  std::vector<Poly> seq = sturmSequence(q);
  return variations(seq, iv.lo) - variations(seq, iv.hi);
}

Poly squarefreePart(const Poly& p) {
  Poly g = Poly::gcd(p, p.derivative());
  return Poly::divmod(p, g).first;
}

// Product of the factors of odd multiplicity (Yun's decomposition), monic.
Poly oddPart(const Poly& p) {
  Poly a0 = Poly::gcd(p, p.derivative());
  Poly b = Poly::divmod(p, a0).first;
  Poly c = Poly::divmod(p.derivative(), a0).first;
  Poly d = c - b.derivative();
  Poly odd(1);
  for (int i = 1; b.degree() > 0; ++i) {
    Poly a = Poly::gcd(b, d);
    b = Poly::divmod(b, a).first;
    c = Poly::divmod(d, a).first;
    d = c - b.derivative();
    if (i % 2 == 1) odd = odd * a;
  }
  return odd;
}

}  // namespace

Interval::Interval(ExactNumber lo_, ExactNumber hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (cmp(lo, hi) > 0) throw std::invalid_argument("interval bounds out of order: [" + lo.str() + ", " + hi.str() + "]");
}

bool Interval::contains(const ExactNumber& x) const { return cmp(lo, x) <= 0 && cmp(x, hi) <= 0; }
bool Interval::contains(const Interval& inner) const { return cmp(lo, inner.lo) <= 0 && cmp(inner.hi, hi) <= 0; }

bool SignVerdict::nonNegative() const {
  return sign == Sign::kPositive || sign == Sign::kNonNegative || sign == Sign::kZero;
}
bool SignVerdict::nonPositive() const {
  return sign == Sign::kNegative || sign == Sign::kNonPositive || sign == Sign::kZero;
}

std::string_view toString(Sign s) {
  switch (s) {
    case Sign::kPositive: return "positive";
    case Sign::kNonNegative: return "nonnegative";
    case Sign::kNegative: return "negative";
    case Sign::kNonPositive: return "nonpositive";
    case Sign::kZero: return "zero";
    case Sign::kMixed: return "mixed";
  }
  return "?";
}

std::string_view toString(CaseLabel c) {
  for (const auto& [label, name] : kLabelNames) {
    if (label == c) return name;
  }
  return "?";
}

CaseLabel parseCaseLabel(std::string_view text) {
  for (const auto& [label, name] : kLabelNames) {
    if (name == text) return label;
  }
  throw std::invalid_argument("unknown case label '" + std::string(text) + "'");
}

SignVerdict quadSignOnInterval(const Poly& p, const Interval& iv) {
  if (p.degree() > 2) throw std::invalid_argument("quadSignOnInterval needs degree <= 2, got " + p.str());
  bool point = cmp(iv.lo, iv.hi) == 0;
  if (p.isZero()) return {Sign::kZero, CaseLabel::kConstant};
  if (p.degree() == 0) return {constantSign(sgn(p.leading()), false, point), CaseLabel::kConstant};
  if (p.degree() == 1) return linearSign(p, iv);

  const Rational alpha = p.coeff(2);
  const Rational beta = p.coeff(1);
  const Rational gamma = p.coeff(0);
  const int s = sgn(alpha);
  const Rational disc = beta * beta - 4 * alpha * gamma;
  if (sgn(disc) < 0) return {constantSign(s, false, point), CaseLabel::kMinus};
  if (sgn(disc) == 0) {
    ExactNumber root(Rational(-beta / (2 * alpha)));
    return {constantSign(s, iv.contains(root), point), CaseLabel::kZero};
  }
  ExactNumber sq = ExactNumber::sqrt(disc);
  ExactNumber r1 = (ExactNumber(-beta) - sq) / (2 * alpha);
  ExactNumber r2 = (ExactNumber(-beta) + sq) / (2 * alpha);
  if (cmp(r1, r2) > 0) std::swap(r1, r2);

  const auto lo_r1 = cmp(iv.lo, r1);
  const auto hi_r1 = cmp(iv.hi, r1);
  const auto lo_r2 = cmp(iv.lo, r2);
  const auto hi_r2 = cmp(iv.hi, r2);
  if (hi_r1 <= 0) return {constantSign(s, hi_r1 == 0, point), CaseLabel::kA1};
  if (lo_r2 >= 0) return {constantSign(s, lo_r2 == 0, point), CaseLabel::kA2};
  if (lo_r1 >= 0 && hi_r2 <= 0) return {constantSign(-s, lo_r1 == 0 || hi_r2 == 0, point), CaseLabel::kB};
  if (lo_r1 < 0) return {Sign::kMixed, hi_r2 <= 0 ? CaseLabel::kD : CaseLabel::kC};
  return {Sign::kMixed, CaseLabel::kE};
}

SignVerdict sturmSignOnInterval(const Poly& p, const Interval& iv) {
  if (p.isZero()) return {Sign::kZero, CaseLabel::kSturm};
  if (cmp(iv.lo, iv.hi) == 0) {
    int s = signOf(p.eval(iv.lo));
    return {constantSign(s, s == 0, true), CaseLabel::kSturm};
  }
  if (p.degree() == 0) return {constantSign(sgn(p.leading()), false, false), CaseLabel::kSturm};

  Poly q = squarefreePart(p);
  bool lo_root = signOf(q.eval(iv.lo)) == 0;
  int closed = rootsHalfOpen(q, iv) + (lo_root ? 1 : 0);

  Poly odd = oddPart(p);
  int odd_open = rootsHalfOpen(odd, iv);
  if (odd.degree() > 0 && signOf(odd.eval(iv.hi)) == 0) --odd_open;
  if (odd_open > 0) return {Sign::kMixed, CaseLabel::kSturm};

  // p = lc(p) * odd * (square factors), and odd keeps one sign inside the interval.
  ExactNumber mid = (iv.lo + iv.hi) / Rational(2);
  int s = sgn(p.leading()) * signOf(odd.eval(mid));
  return {constantSign(s, closed > 0, false), CaseLabel::kSturm};
}

SignVerdict polySignOnInterval(const Poly& p, const Interval& iv) {
  if (p.degree() <= 2) return quadSignOnInterval(p, iv);
  return sturmSignOnInterval(p, iv);
}

}  // namespace qeuclid
