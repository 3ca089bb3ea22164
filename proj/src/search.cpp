#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "covering_internal.hpp"
#include "qeuclid/covering.hpp"

namespace qeuclid {

namespace {

// The part of the search box still to cover: bottom <= y <= top over [xlo, xhi].
struct Task {
  Rational xlo;
  Rational xhi;
  Curve bottom;
  Curve top;
  int depth = 0;
};

Locus locusOf(const Curve& c) {
  Locus l;
  if (c.isBranch()) {
    l.branch = c.branch();
  } else {
    l.kind = Locus::Kind::kHorizontal;
    l.c = c.level();
  }
  return l;
}

Locus vertical(const Rational& x) {
  Locus l;
  l.kind = Locus::Kind::kVertical;
  l.c = x;
  return l;
}

// Small shifts first, then lexicographic, so results are deterministic and branches stay tame.
bool simpler(const Shift& a, const Shift& b) {
  auto size = [](const Shift& s) { return std::max(s.u < 0 ? -s.u : s.u, s.v < 0 ? -s.v : s.v); };
  if (size(a) != size(b)) return size(a) < size(b);
  return a < b;
}

class Searcher {
 public:
  Searcher(const Family& fam, const SearchConfig& config, const SearchBox& box)
      : fam_(fam), config_(config), box_(box) {
    result_.certificate.m = fam.m;
    result_.certificate.M = fam.M;
  }

  SearchResult run() {
    if (box_.x0 == box_.x1 && box_.y0 == box_.y1) return degenerate();
    work_.push_back({box_.x0, box_.x1, Curve::constant(box_.y0), Curve::constant(box_.y1), 0});
    while (!work_.empty()) {
      Task t = std::move(work_.back());
      work_.pop_back();
      process(t);
    }
    Certificate& cert = result_.certificate;
    std::sort(cert.points.begin(), cert.points.end(),
              [](const CertPoint& a, const CertPoint& b) { return std::stoul(a.label) < std::stoul(b.label); });
    result_.complete = result_.residue.empty();
    return std::move(result_);
  }

 private:
  SearchResult degenerate() {
    Point p{ExactNumber(box_.x0), ExactNumber(box_.y0)};
    std::vector<Shift> pairs = coverSetExact(fam_, p, config_.bound);
    label(p, {vertical(box_.x0)});
    if (pairs.empty()) {
      result_.residue.push_back("point (" + p.x.str() + ", " + p.y.str() + ") is not covered");
    } else {
      result_.certificate.pairs.push_back(pairs.front());
    }
    result_.complete = result_.residue.empty();
    return std::move(result_);
  }

  Point at(const Curve& c, const Rational& x) const { return {ExactNumber(x), evalAt(fam_, c, ExactNumber(x))}; }

  const std::vector<Shift>& covers(const Point& p) {
    auto key = std::make_pair(p.x.str(), p.y.str());
    auto it = cover_cache_.find(key);
    if (it == cover_cache_.end()) {
      std::vector<Shift> found = coverSetExact(fam_, p, config_.bound);
      std::sort(found.begin(), found.end(), simpler);
      it = cover_cache_.emplace(key, std::move(found)).first;
    }
    return it->second;
  }

  std::string label(const Point& p, const std::vector<Locus>& loci) {
    Certificate& cert = result_.certificate;
    auto key = std::make_pair(p.x.str(), p.y.str());
    auto it = labels_.find(key);
    if (it != labels_.end()) {
      CertPoint* existing = nullptr;
      for (CertPoint& cp : cert.points) {
        if (cp.label == it->second) existing = &cp;
      }
      for (const Locus& l : loci) {
        if (std::find(existing->on.begin(), existing->on.end(), l) == existing->on.end()) existing->on.push_back(l);
      }
      return it->second;
    }
    std::string name;
    const ExactNumber zero(0L), half(Rational(1, 2));
    if ((p.x == zero || p.x == half) && (p.y == zero || p.y == half)) {
      // S0 corners keep the conventional labels 0..3, counter-clockwise from the origin.
      name = p.y == zero ? (p.x == zero ? "0" : "1") : (p.x == half ? "2" : "3");
    } else {
      name = std::to_string(next_label_++);
    }
    labels_.emplace(key, name);
    cert.points.push_back({name, p, loci, ""});
    return name;
  }

  // Proves hi >= lo on [xlo, xhi], collecting the claims that record it.
  bool prove(const Curve& hi, const Curve& lo, const Interval& iv, const Branch* bound, std::vector<Claim>& claims) {
    if (hi == lo) return true;
    if (!hi.isBranch() && !lo.isBranch()) return hi.level() >= lo.level();
    std::vector<Interval> pieces = bound ? detail::constrainedPieces(fam_, *bound, iv) : std::vector<Interval>{iv};
    for (const Interval& piece : pieces) {
      DominanceProof proof = detail::tryCompare(fam_, hi, lo, piece);
      if (!proof.holds) return false;
      if (auto c = detail::claimFor(hi, lo, piece, proof)) claims.push_back(std::move(*c));
    }
    return true;
  }

  bool defined(const Curve& c, const Interval& iv) const { return !c.isBranch() || domain(fam_, c.branch(), iv); }

  void emit(const Task& t, const Curve& bottom, const Curve& top, const Shift& owner, std::vector<Claim> claims) {
    Certificate& cert = result_.certificate;
    Point bl = at(bottom, t.xlo), br = at(bottom, t.xhi), tr = at(top, t.xhi), tl = at(top, t.xlo);
    struct Item {
      std::string point;
      std::optional<Branch> arcAfter;
    };
    std::vector<Item> ring{
        {label(bl, {locusOf(bottom), vertical(t.xlo)}), bottom.isBranch() ? std::optional(bottom.branch()) : std::nullopt},
        {label(br, {locusOf(bottom), vertical(t.xhi)}), std::nullopt},
        {label(tr, {locusOf(top), vertical(t.xhi)}), top.isBranch() ? std::optional(top.branch()) : std::nullopt},
        {label(tl, {locusOf(top), vertical(t.xlo)}), std::nullopt},
    };
    // Collapse repeated corners where the bottom and top curves meet.
    for (std::size_t i = 0; i < ring.size() && ring.size() > 1;) {
      Item& next = ring[(i + 1) % ring.size()];
      if (ring[i].point == next.point && !ring[i].arcAfter) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      } else if (ring[i].point == next.point && !next.arcAfter) {
        next.arcAfter = ring[i].arcAfter;
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    Region region;
    region.owner = owner;
    for (const Item& item : ring) {
      region.items.push_back({false, item.point, {}});
      if (item.arcAfter) region.items.push_back({true, "", *item.arcAfter});
    }
    cert.regions.push_back(std::move(region));
    if (std::find(cert.pairs.begin(), cert.pairs.end(), owner) == cert.pairs.end()) cert.pairs.push_back(owner);
    for (Claim& c : claims) {
      if (std::find(cert.claims.begin(), cert.claims.end(), c) == cert.claims.end()) cert.claims.push_back(std::move(c));
    }
  }

  void residue(const Task& t, const std::string& why) {
    result_.residue.push_back("[" + t.xlo.get_str() + ", " + t.xhi.get_str() + "] between " + t.bottom.str() +
                              " and " + t.top.str() + ": " + why);
  }

  bool coversAll(const Shift& s, const std::vector<const std::vector<Shift>*>& sets) const {
    return std::all_of(sets.begin(), sets.end(), [&](const std::vector<Shift>* set) {
      return std::find(set->begin(), set->end(), s) != set->end();
    });
  }

  void process(const Task& t) {
    if (result_.certificate.regions.size() >= config_.maxRegions) {
      residue(t, "region budget exhausted");
      return;
    }
    if (++tasks_ > config_.maxTasks) {
      residue(t, "task budget exhausted");
      return;
    }
    const Interval iv{ExactNumber(t.xlo), ExactNumber(t.xhi)};
    Point bl = at(t.bottom, t.xlo), br = at(t.bottom, t.xhi), tr = at(t.top, t.xhi), tl = at(t.top, t.xlo);
    const std::vector<Shift>& c_bl = covers(bl);
    const std::vector<Shift>& c_br = covers(br);
    const std::vector<Shift>& c_tr = covers(tr);
    const std::vector<Shift>& c_tl = covers(tl);

    // A pair covering every vertex may cover the whole slab.
    for (const Shift& s : c_bl) {
      if (!coversAll(s, {&c_br, &c_tr, &c_tl})) continue;
      Branch up = upperBranch(s), low = lowerBranch(s);
      std::vector<Claim> claims;
      if (prove(Curve(up), t.top, iv, &up, claims) && prove(t.bottom, Curve(low), iv, &low, claims)) {
        emit(t, t.bottom, t.top, s, std::move(claims));
        return;
      }
    }

    // A pair covering the bottom corners takes a band above the bottom curve.
    for (const Shift& s : c_bl) {
      if (!coversAll(s, {&c_br})) continue;
      Branch up = upperBranch(s), low = lowerBranch(s);
      Curve cut(up);
      if (cut == t.bottom || cut == t.top || !defined(cut, iv)) continue;
      std::vector<Claim> claims;
      if (prove(cut, t.bottom, iv, nullptr, claims) && prove(t.top, cut, iv, nullptr, claims) &&
          prove(t.bottom, Curve(low), iv, &low, claims)) {
        emit(t, t.bottom, cut, s, std::move(claims));
        work_.push_back({t.xlo, t.xhi, cut, t.top, t.depth});
        return;
      }
    }

    // Symmetrically, a pair covering the top corners takes a band below the top curve.
    for (const Shift& s : c_tl) {
      if (!coversAll(s, {&c_tr})) continue;
      Branch up = upperBranch(s), low = lowerBranch(s);
      Curve cut(low);
      if (cut == t.bottom || cut == t.top || !defined(cut, iv)) continue;
      std::vector<Claim> claims;
      if (prove(cut, t.bottom, iv, nullptr, claims) && prove(t.top, cut, iv, nullptr, claims) &&
          prove(Curve(up), t.top, iv, &up, claims)) {
        emit(t, cut, t.top, s, std::move(claims));
        work_.push_back({t.xlo, t.xhi, t.bottom, cut, t.depth});
        return;
      }
    }

    if (t.depth >= config_.maxDepth) {
      residue(t, "depth limit reached");
      return;
    }
    Rational mid = (t.xlo + t.xhi) / 2;
    // Right half is pushed first so the left half is explored first.
    work_.push_back({mid, t.xhi, t.bottom, t.top, t.depth + 1});
    work_.push_back({t.xlo, mid, t.bottom, t.top, t.depth + 1});
  }

  Family fam_;
  SearchConfig config_;
  SearchBox box_;
  SearchResult result_;
  std::vector<Task> work_;
  std::map<std::pair<std::string, std::string>, std::vector<Shift>> cover_cache_;
  std::map<std::pair<std::string, std::string>, std::string> labels_;
  unsigned next_label_ = 4;
  std::size_t tasks_ = 0;
};

}  // namespace

SearchResult search(const Family& fam, const SearchConfig& config, const SearchBox& box) {
  return Searcher(fam, config, box).run();
}

}  // namespace qeuclid
