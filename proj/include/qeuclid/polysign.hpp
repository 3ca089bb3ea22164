#pragma once

#include <string>
#include <string_view>

#include "qeuclid/exact.hpp"
#include "qeuclid/poly.hpp"

namespace qeuclid {

struct Interval {
  ExactNumber lo;
  ExactNumber hi;

  Interval() = default;
  Interval(ExactNumber lo_, ExactNumber hi_);  // throws std::invalid_argument if lo > hi
  bool contains(const ExactNumber& x) const;
  bool contains(const Interval& inner) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Sign {
  kPositive,     // > 0 everywhere on the interval
  kNonNegative,  // >= 0 with at least one zero
  kNegative,
  kNonPositive,
  kZero,  // the zero polynomial
  kMixed,
};

// Case labels name the argument that fixes a quadratic's sign; roots are sorted so x- <= x+.
//   minus: disc < 0          zero: disc = 0
//   a1: interval left of x-  a2: interval right of x+   b: interval inside [x-, x+]
//   d: only x- interior      e: only x+ interior        c: both roots interior
// linear, constant and sturm describe the other degrees.
enum class CaseLabel { kMinus, kZero, kA1, kA2, kB, kC, kD, kE, kLinear, kConstant, kSturm, kSigns };

struct SignVerdict {
  Sign sign = Sign::kZero;
  CaseLabel label = CaseLabel::kConstant;

  bool nonNegative() const;
  bool nonPositive() const;
  friend bool operator==(const SignVerdict&, const SignVerdict&) = default;
};

std::string_view toString(Sign s);
std::string_view toString(CaseLabel c);
CaseLabel parseCaseLabel(std::string_view text);  // throws std::invalid_argument

// Sign of a polynomial of degree <= 2 on iv. Throws std::invalid_argument for degree > 2.
SignVerdict quadSignOnInterval(const Poly& p, const Interval& iv);
// Sturm-sequence classification, usable at any degree.
SignVerdict sturmSignOnInterval(const Poly& p, const Interval& iv);
// quadSignOnInterval for degree <= 2, Sturm otherwise.
SignVerdict polySignOnInterval(const Poly& p, const Interval& iv);

}  // namespace qeuclid
