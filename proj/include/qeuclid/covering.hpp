#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qeuclid/field.hpp"
#include "qeuclid/hyperbola.hpp"

namespace qeuclid {

// All (u, v) with |u|, |v| <= bound and |f(a+u, b+v)| <= M, in lexicographic order.
std::vector<Shift> coverSet(const Family& fam, const RationalPoint& p, std::int64_t bound);
// Same set for a point with radical coordinates. Candidates come from rational
// enclosures of the point; membership is decided exactly.
std::vector<Shift> coverSetExact(const Family& fam, const Point& p, std::int64_t bound);

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A curve a certificate point is declared to lie on.
struct Locus {
  enum class Kind { kBranch, kVertical, kHorizontal };
  Kind kind = Kind::kBranch;
  Branch branch;
  Rational c;  // x = c or y = c

  static Locus parse(std::string_view text);  // "B[..]", "x=c" or "y=c"
  std::string str() const;
  friend bool operator==(const Locus&, const Locus&) = default;
};

struct CertPoint {
  std::string label;  // "4" for P4, "c1" for a critical point
  Point at;
  std::vector<Locus> on;
  std::string comment;  // comment lines preceding the record, without '#'

  bool isCritical() const { return !label.empty() && label.front() == 'c'; }
  friend bool operator==(const CertPoint&, const CertPoint&) = default;
};

struct RegionItem {
  bool isArc = false;
  std::string label;  // point label when !isArc
  Branch arc;

  friend bool operator==(const RegionItem&, const RegionItem&) = default;
};

struct Region {
  Shift owner;
  std::vector<RegionItem> items;  // cyclic, counter-clockwise
  std::string comment;

  friend bool operator==(const Region&, const Region&) = default;
};

enum class ClaimKind { kGeq, kGeqc, kLeqc };

struct Claim {
  ClaimKind kind = ClaimKind::kGeq;
  Branch lhs;
  Branch rhs;        // kGeq only
  Rational level;    // kGeqc / kLeqc only
  Interval on;
  std::optional<Poly> poly;  // none when decided by term signs
  CaseLabel label = CaseLabel::kConstant;
  std::string comment;

  Curve lhsCurve() const { return Curve(lhs); }
  Curve rhsCurve() const { return kind == ClaimKind::kGeq ? Curve(rhs) : Curve::constant(level); }
  Direction direction() const { return kind == ClaimKind::kLeqc ? Direction::kLeq : Direction::kGeq; }
  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Certificate {
  int m = 0;
  Rational M;
  std::vector<CertPoint> points;
  std::vector<Shift> pairs;
  std::vector<Region> regions;
  std::vector<Claim> claims;
  std::string comment;  // leading comment block
  std::string trailer;  // comment lines after the last record

  Family family() const { return {m, M}; }
  const CertPoint* findPoint(std::string_view label) const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate parseCertificate(std::string_view text);  // throws CertificateError
std::string serializeCertificate(const Certificate& cert);
Certificate loadCertificate(const std::string& path);

// One x-slab of a region: bottom <= y <= top for x in the interval.
struct Slab {
  Interval x;
  Curve bottom;
  Curve top;
};
// Decomposes an x-monotone counter-clockwise region; throws CertificateError otherwise.
std::vector<Slab> regionSlabs(const Certificate& cert, const Region& region);

struct CheckResult {
  std::string check;    // point, claim, boundary, coverage, tiling
  std::string subject;  // which record
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> results;
  bool ok() const;
  std::size_t failures() const;
  std::string str() const;
};

struct VerifyOptions {
  // When false, every coverage obligation needs an identical curve, a vacuous bound or a
  // certificate claim; otherwise missing comparisons are derived and reported as such.
  bool deriveMissing = true;
};

VerificationReport verify(const Certificate& cert, VerifyOptions options = {});

// Appends a claim for every coverage comparison that verify would otherwise derive, so the
// result verifies with deriveMissing = false.
Certificate completeClaims(const Certificate& cert);

struct SearchConfig {
  std::int64_t bound = 100;
  int maxDepth = 20;
  std::size_t maxRegions = 2000;
  // Slabs examined, including the ones that end up bisected; bounds the work even when no
  // region is ever emitted.
  std::size_t maxTasks = 20000;
};

// Axis-aligned rectangle [x0, x1] x [y0, y1] to cover (S0 by default).
struct SearchBox {
  Rational x0 = 0;
  Rational x1{1, 2};
  Rational y0 = 0;
  Rational y1{1, 2};
};

struct SearchResult {
  Certificate certificate;
  bool complete = false;
  std::vector<std::string> residue;  // uncovered slabs when incomplete
};

SearchResult search(const Family& fam, const SearchConfig& config, const SearchBox& box = {});

}  // namespace qeuclid
