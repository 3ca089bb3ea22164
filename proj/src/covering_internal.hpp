#pragma once

// Helpers shared by the verifier and the search; not part of the public API.

#include <optional>
#include <string>
#include <vector>

#include "qeuclid/covering.hpp"

namespace qeuclid::detail {

struct Edge {
  const CertPoint* from = nullptr;
  const CertPoint* to = nullptr;
  std::optional<Branch> arc;  // straight segment when empty
};

// Consecutive boundary edges of a region; throws CertificateError on dangling labels or
// an open boundary.
std::vector<Edge> regionEdges(const Certificate& cert, const Region& region);

// Sub-intervals of iv on which the owner bound `bound` actually constrains b. A bound with
// epsilon = +1 imposes nothing where its radicand is <= 0.
std::vector<Interval> constrainedPieces(const Family& fam, const Branch& bound, const Interval& iv);

// The claim recording a successful compare(hi, lo) on iv, or nullopt when both are constants.
std::optional<Claim> claimFor(const Curve& hi, const Curve& lo, const Interval& iv, const DominanceProof& proof);

// compare() that reports an undefined branch as a failed proof instead of throwing.
DominanceProof tryCompare(const Family& fam, const Curve& hi, const Curve& lo, const Interval& iv);

}  // namespace qeuclid::detail
