#pragma once

#include <cstddef>

#include "qeuclid/field.hpp"

namespace qeuclid {

// a0 = x + s*a with x the nearest integer, 0 <= a <= 1/2. Ties go to the even x; s = +1
// when a = 0.
struct Rounding {
  Integer x;
  int s = 1;
  Rational a;
};
Rounding roundHalf(const Rational& a0);

struct DivisionResult {
  RingElement quotient;
  Rational remainderNorm;  // Norm(xi - quotient)
  Shift pairUsed;
  int signA = 1;
  int signB = 1;
};

struct DivisionOptions {
  bool allPairs = false;  // scan every pair and keep the smallest |norm|
};

// Throws std::logic_error("certificate incomplete") if no covering pair reaches M1.
DivisionResult divide(const FieldData& F, const FieldElement& xi, DivisionOptions options = {});

struct GcdResult {
  RingElement gcd;
  std::size_t steps = 0;  // number of divisions performed
};

// Euclidean algorithm in Z[sqrt m], normalized so x > 0, or x = 0 and y > 0.
// Throws std::invalid_argument when both inputs are zero.
GcdResult gcdWithSteps(const FieldData& F, const RingElement& alpha, const RingElement& beta);
inline RingElement gcd(const FieldData& F, const RingElement& alpha, const RingElement& beta) {
  return gcdWithSteps(F, alpha, beta).gcd;
}

}  // namespace qeuclid
