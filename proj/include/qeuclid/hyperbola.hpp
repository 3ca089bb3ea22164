#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qeuclid/exact.hpp"
#include "qeuclid/field.hpp"
#include "qeuclid/poly.hpp"
#include "qeuclid/polysign.hpp"

namespace qeuclid {

// The norm form a^2 - m b^2 together with the covering radius M.
struct Family {
  int m = 0;
  Rational M;

  static Family of(const FieldData& F) { return {F.m, F.M1}; }
};

// B(a) = -v + theta * sqrt(((a+u)^2 - epsilon*M) / m), one branch of |f(a+u, b+v)| = M.
struct Branch {
  std::int64_t u = 0;
  std::int64_t v = 0;
  int theta = 1;
  int epsilon = 1;

  friend bool operator==(const Branch&, const Branch&) = default;
  friend auto operator<=>(const Branch&, const Branch&) = default;
};

// Either a branch or a horizontal line b = c.
class Curve {
 public:
  Curve() = default;
  Curve(const Branch& b) : branch_(b) {}  // NOLINT(google-explicit-constructor)
  static Curve constant(const Rational& c);

  bool isBranch() const { return branch_.has_value(); }
  const Branch& branch() const { return *branch_; }
  const Rational& level() const { return level_; }

  friend bool operator==(const Curve&, const Curve&) = default;
  std::string str() const;  // "B[u,v,theta,epsilon]" or the rational level

 private:
  std::optional<Branch> branch_;
  Rational level_;
};

struct Point {
  ExactNumber x;
  ExactNumber y;
  friend bool operator==(const Point&, const Point&) = default;
};

std::string toString(const Branch& b);
Branch parseBranch(std::string_view text);  // "B[u,v,theta,epsilon]"

// The branches bounding the set covered by shift (u, v): lower <= b <= upper, where a bound
// whose radicand is negative imposes nothing.
Branch upperBranch(const Shift& s);
Branch lowerBranch(const Shift& s);

// ((a+u)^2 - epsilon*M) / m as a polynomial in a.
Poly radicand(const Family& fam, const Branch& b);
bool domain(const Family& fam, const Branch& b, const Interval& iv);
// +1 if B increases on [0, 1/2], -1 if it decreases (u >= 0 vs u < 0, flipped by theta).
int monotoneDirection(const Branch& b);

ExactNumber evalAt(const Family& fam, const Curve& c, const ExactNumber& a);
bool onBranch(const Family& fam, const Branch& b, const Point& p);

std::vector<Point> intersect(const Family& fam, const Branch& b1, const Branch& b2);
enum class Axis { kX, kY };  // kX: the vertical line x = c
std::vector<Point> intersectLine(const Family& fam, const Branch& b, Axis axis, const Rational& c);

enum class Direction { kGeq, kLeq };

struct SideCondition {
  Poly poly;
  SignVerdict verdict;
};

struct DominanceProof {
  std::optional<Poly> reduced;  // primitive, sign-equivalent to lhs - rhs; none if decided by term signs
  SignVerdict verdict;
  bool holds = false;
  std::vector<SideCondition> sideConditions;
  std::string failure;  // why the proof did not go through, empty if it did
};

// Proves lhs (dir) rhs on iv by eliminating radicals from lhs - rhs.
DominanceProof compare(const Family& fam, const Curve& lhs, const Curve& rhs, const Interval& iv, Direction dir);
inline DominanceProof dominates(const Family& fam, const Curve& hi, const Curve& lo, const Interval& iv) {
  return compare(fam, hi, lo, iv, Direction::kGeq);
}

}  // namespace qeuclid
