#include "qeuclid/field.hpp"

#include <stdexcept>

namespace qeuclid {

namespace {

RationalPoint pt(long xn, long xd, long yn, long yd) {
  Rational x(xn, xd);
  Rational y(yn, yd);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

bool isSquarefree(int m) {
  for (int p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

FieldData makeRow(int m, Rational M1, std::vector<RationalPoint> critical, std::vector<Shift> pairs) {
  FieldData F;
  F.m = m;
  F.discriminant = Integer(4) * m;
  F.M1 = std::move(M1);
  F.criticalPoints = std::move(critical);
  F.coveringPairs = std::move(pairs);
  return F;
}

}  // namespace

const std::vector<int>& builtinFieldIds() {
  static const std::vector<int> ids{2, 3, 6, 7, 11, 19};
  return ids;
}

FieldData builtinField(int m) {
  switch (m) {
    case 2:
      return makeRow(2, Rational(1, 2), {pt(0, 1, 1, 2)}, {{0, 0}});
    case 3:
      return makeRow(3, Rational(1, 2), {pt(1, 2, 1, 2)}, {{0, 0}, {-1, 0}});
    case 6:
      return makeRow(6, Rational(3, 4), {pt(1, 2, 1, 2)}, {{0, 0}, {1, 0}, {-2, -1}});
    case 7:
      return makeRow(7, Rational(9, 14), {pt(1, 2, 5, 14), pt(1, 2, 9, 14)}, {{0, 0}, {1, 0}, {-4, 1}, {-2, -1}});
    case 11:
      // The first six pairs are the classical list. S0 is not covered without (-2,-1), which
      // owns the region along the arc P5 P8, so it is tried last.
      return makeRow(11, Rational(19, 22), {pt(1, 2, 15, 22), pt(1, 2, 7, 22)},
                     {{0, 0}, {1, 0}, {-6, -2}, {-5, 1}, {5, -2}, {25, -8}, {-2, -1}});
    case 19:
      return makeRow(19, Rational(170, 171), {pt(0, 1, 20, 57), pt(0, 1, 37, 57)},
                     {{0, 0},
                      {1, 0},
                      {-2, 0},
                      {2, -1},
                      {-7, 1},
                      {-3, -1},
                      {7, -2},
                      {-6, 1},
                      {991, 227},
                      {-19, 4},
                      {-80, 18},
                      {-430, -99},
                      {90, -21}});
    default:
      throw std::invalid_argument("unsupported field m=" + std::to_string(m) +
                                  "; builtin fields are m = 2, 3, 6, 7, 11, 19");
  }
}

FieldData customField(int m, Rational M1, std::vector<RationalPoint> critical, std::vector<Shift> pairs) {
  if (m < 2 || !isSquarefree(m) || m % 4 == 1) {
    throw std::invalid_argument("m must be squarefree, > 1 and not 1 mod 4 (got " + std::to_string(m) + ")");
  }
  if (sgn(M1) <= 0) throw std::invalid_argument("M must be positive");
  return makeRow(m, std::move(M1), std::move(critical), std::move(pairs));
}

Rational norm(int m, const Rational& a, const Rational& b) { return a * a - m * b * b; }

Rational shiftedNorm(const FieldData& F, const Rational& a, const Rational& b, std::int64_t u, std::int64_t v) {
  return ShiftedNormEvaluator(F, a, b)(u, v);
}

ShiftedNormEvaluator::ShiftedNormEvaluator(const FieldData& F, const Rational& a, const Rational& b)
    : field_(&F), base_(norm(F.m, a, b)), two_a_(2 * a), two_mb_(2 * F.m * b) {
  pair_norms_.reserve(F.coveringPairs.size());
  for (const Shift& s : F.coveringPairs) pair_norms_.push_back(norm(F.m, Rational(s.u), Rational(s.v)));
}

Rational ShiftedNormEvaluator::operator()(std::int64_t u, std::int64_t v) const {
  Rational uu(static_cast<long>(u));
  Rational vv(static_cast<long>(v));
  return base_ + norm(field_->m, uu, vv) + two_a_ * uu - two_mb_ * vv;
}

Rational ShiftedNormEvaluator::forPair(std::size_t index) const {
  const Shift& s = field_->coveringPairs.at(index);
  return base_ + pair_norms_[index] + two_a_ * static_cast<long>(s.u) - two_mb_ * static_cast<long>(s.v);
}

RingElement add(const RingElement& p, const RingElement& q) { return {p.x + q.x, p.y + q.y}; }
RingElement sub(const RingElement& p, const RingElement& q) { return {p.x - q.x, p.y - q.y}; }

RingElement mul(int m, const RingElement& p, const RingElement& q) {
  return {p.x * q.x + m * p.y * q.y, p.x * q.y + p.y * q.x};
}

RingElement conjugate(const RingElement& p) { return {p.x, -p.y}; }

Integer norm(int m, const RingElement& p) { return p.x * p.x - m * p.y * p.y; }

FieldElement divideToField(int m, const RingElement& p, const RingElement& q) {
  Integer n = norm(m, q);
  if (n == 0) throw std::domain_error("division by zero in Z[sqrt m]");
  RingElement num = mul(m, p, conjugate(q));
  Rational a(num.x, n);
  Rational b(num.y, n);
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

bool divides(int m, const RingElement& q, const RingElement& p) {
  FieldElement r = divideToField(m, p, q);
  return r.a.get_den() == 1 && r.b.get_den() == 1;
}

std::string toString(const RingElement& p) { return p.x.get_str() + "," + p.y.get_str(); }
std::string toString(const FieldElement& p) { return p.a.get_str() + "," + p.b.get_str(); }

}  // namespace qeuclid
