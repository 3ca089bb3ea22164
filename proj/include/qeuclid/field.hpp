#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qeuclid/exact.hpp"

namespace qeuclid {

struct Shift {
  std::int64_t u = 0;
  std::int64_t v = 0;

  friend bool operator==(const Shift&, const Shift&) = default;
  friend auto operator<=>(const Shift&, const Shift&) = default;
};

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// Constants of Q(sqrt m) for m squarefree, m != 1 mod 4, ring of integers Z[sqrt m].
struct FieldData {
  int m = 0;
  Integer discriminant;  // 4m
  Rational M1;
  std::vector<RationalPoint> criticalPoints;
  std::vector<Shift> coveringPairs;  // tried in this order by division
};

// Rows for m in {2, 3, 6, 7, 11, 19}; throws std::invalid_argument for anything else.
FieldData builtinField(int m);
const std::vector<int>& builtinFieldIds();
// A user-supplied row; validates m (squarefree, > 1, m != 1 mod 4) and 0 < M1.
FieldData customField(int m, Rational M1, std::vector<RationalPoint> critical, std::vector<Shift> pairs);

Rational norm(int m, const Rational& a, const Rational& b);
inline Rational norm(const FieldData& F, const Rational& a, const Rational& b) { return norm(F.m, a, b); }
Rational shiftedNorm(const FieldData& F, const Rational& a, const Rational& b, std::int64_t u, std::int64_t v);

// f(a+u, b+v) = f(a,b) + f(u,v) + 2(au - m b v) with f(a,b), 2a and 2mb fixed once per
// point and f(u,v) cached per covering pair.
class ShiftedNormEvaluator {
 public:
  ShiftedNormEvaluator(const FieldData& F, const Rational& a, const Rational& b);
  Rational operator()(std::int64_t u, std::int64_t v) const;
  // Same value for F.coveringPairs[index], using the cached f(u, v).
  Rational forPair(std::size_t index) const;

 private:
  const FieldData* field_;
  Rational base_;
  Rational two_a_;
  Rational two_mb_;
  std::vector<Rational> pair_norms_;
};

struct FieldElement {
  Rational a;
  Rational b;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

struct RingElement {
  Integer x;
  Integer y;

  bool isZero() const { return sgn(x) == 0 && sgn(y) == 0; }
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement add(const RingElement& p, const RingElement& q);
RingElement sub(const RingElement& p, const RingElement& q);
RingElement mul(int m, const RingElement& p, const RingElement& q);
RingElement conjugate(const RingElement& p);
Integer norm(int m, const RingElement& p);
// p / q as a field element; q must be nonzero.
FieldElement divideToField(int m, const RingElement& p, const RingElement& q);
// True iff q divides p in Z[sqrt m]; q must be nonzero.
bool divides(int m, const RingElement& q, const RingElement& p);

std::string toString(const RingElement& p);
std::string toString(const FieldElement& p);

}  // namespace qeuclid
