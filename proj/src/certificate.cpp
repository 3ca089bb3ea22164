#include <fstream>
#include <sstream>

#include "qeuclid/covering.hpp"

namespace qeuclid {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool startsWith(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::vector<std::string_view> splitSpaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (start < i) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::int64_t parseInt(std::string_view s, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(std::string(s), &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw CertificateError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(s) + "'");
}

std::string pointLabel(std::string_view token, int line) {
  if (token.size() >= 2 && token.front() == 'c') {
    parseInt(token.substr(1), line);
    return std::string(token);
  }
  parseInt(token, line);
  return std::string(token);
}

std::string itemText(const RegionItem& item) {
  if (item.isArc) {
    const Branch& b = item.arc;
    return "arc[" + std::to_string(b.u) + "," + std::to_string(b.v) + "," + std::to_string(b.theta) + "," +
           std::to_string(b.epsilon) + "]";
  }
  return item.label.front() == 'c' ? item.label : "P" + item.label;
}

std::string_view claimKindName(ClaimKind k) {
  switch (k) {
    case ClaimKind::kGeq: return "geq";
    case ClaimKind::kGeqc: return "geqc";
    case ClaimKind::kLeqc: return "leqc";
  }
  return "?";
}

void emitComment(std::ostringstream& out, const std::string& comment) {
  if (comment.empty()) return;
  std::istringstream lines(comment);
  std::string line;
  while (std::getline(lines, line)) out << (line.empty() ? "#" : "# " + line) << "\n";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Certificate run() {
    std::size_t pos = 0;
    bool seen_field = false;
    while (pos <= text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      std::string_view raw = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_;
      std::string_view body = trim(raw);
      if (startsWith(body, "#")) {
        std::string_view c = body.substr(1);
        if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
        if (!pending_.empty()) pending_ += "\n";
        pending_ += std::string(c);
      } else if (!body.empty()) {
        if (startsWith(body, "field ")) {
          if (seen_field) fail("duplicate field line");
          parseField(body);
          seen_field = true;
        } else {
          if (!seen_field) fail("the field line must come first");
          if (startsWith(body, "point ")) {
            parsePoint(body);
          } else if (startsWith(body, "pair ")) {
            parsePair(body);
          } else if (startsWith(body, "region ")) {
            parseRegion(body);
          } else if (startsWith(body, "claim ")) {
            parseClaim(body);
          } else {
            fail("unknown record '" + std::string(body) + "'");
          }
        }
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    // A file without any record is the empty certificate; anything else needs its field.
    bool empty = cert_.points.empty() && cert_.pairs.empty() && cert_.regions.empty() && cert_.claims.empty();
    if (!seen_field && !empty) fail("missing field line");
    cert_.trailer = std::move(pending_);
    return std::move(cert_);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw CertificateError("line " + std::to_string(line_) + ": " + why);
  }

  std::string takeComment() { return std::exchange(pending_, std::string()); }

  template <typename F>
  auto guarded(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const CertificateError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  void parseField(std::string_view body) {
    cert_.comment = takeComment();
    auto tokens = splitSpaces(body);
    if (tokens.size() != 3 || !startsWith(tokens[1], "m=") || !startsWith(tokens[2], "M=")) {
      fail("expected 'field m=<int> M=<p>/<q>'");
    }
    cert_.m = static_cast<int>(parseInt(tokens[1].substr(2), line_));
    cert_.M = guarded([&] { return parseRational(tokens[2].substr(2)); });
  }

  void parsePoint(std::string_view body) {
    CertPoint p;
    p.comment = takeComment();
    std::string_view rest = trim(body.substr(6));
    std::size_t sp = rest.find(' ');
    if (sp == std::string_view::npos) fail("point needs a label and coordinates");
    p.label = pointLabel(rest.substr(0, sp), line_);
    rest = trim(rest.substr(sp));
    if (!startsWith(rest, "x=")) fail("expected x=");
    std::size_t ypos = rest.find(" y=");
    if (ypos == std::string_view::npos) fail("expected y=");
    std::size_t onpos = rest.find(" on=");
    std::string_view xs = rest.substr(2, ypos - 2);
    std::string_view ys = rest.substr(ypos + 3, onpos == std::string_view::npos ? std::string_view::npos : onpos - ypos - 3);
    p.at.x = guarded([&] { return ExactNumber::parse(xs); });
    p.at.y = guarded([&] { return ExactNumber::parse(ys); });
    if (onpos != std::string_view::npos) {
      std::string_view loci = trim(rest.substr(onpos + 4));
      std::size_t start = 0;
      while (start <= loci.size()) {
        std::size_t semi = loci.find(';', start);
        std::string_view one = loci.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        p.on.push_back(guarded([&] { return Locus::parse(trim(one)); }));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
      }
    }
    if (cert_.findPoint(p.label) != nullptr) fail("duplicate point label '" + p.label + "'");
    cert_.points.push_back(std::move(p));
  }

  void parsePair(std::string_view body) {
    auto tokens = splitSpaces(body);
    if (tokens.size() != 3) fail("expected 'pair <u> <v>'");
    takeComment();
    cert_.pairs.push_back({parseInt(tokens[1], line_), parseInt(tokens[2], line_)});
  }

  void parseRegion(std::string_view body) {
    Region r;
    r.comment = takeComment();
    std::string_view rest = trim(body.substr(7));
    if (!startsWith(rest, "owner=(")) fail("expected owner=(u,v)");
    std::size_t close = rest.find("):");
    if (close == std::string_view::npos) fail("expected '):' after the owner");
    std::string_view owner = rest.substr(7, close - 7);
    std::size_t comma = owner.find(',');
    if (comma == std::string_view::npos) fail("owner needs two coordinates");
    r.owner = {parseInt(trim(owner.substr(0, comma)), line_), parseInt(trim(owner.substr(comma + 1)), line_)};
    for (std::string_view tok : splitSpaces(rest.substr(close + 2))) {
      RegionItem item;
      if (startsWith(tok, "arc[")) {
        item.isArc = true;
        item.arc = guarded([&] { return parseBranch(std::string("B") + std::string(tok.substr(3))); });
      } else if (startsWith(tok, "P")) {
        item.label = pointLabel(tok.substr(1), line_);
      } else if (startsWith(tok, "c")) {
        item.label = pointLabel(tok, line_);
      } else {
        fail("unknown region item '" + std::string(tok) + "'");
      }
      r.items.push_back(std::move(item));
    }
    cert_.regions.push_back(std::move(r));
  }

  void parseClaim(std::string_view body) {
    Claim c;
    c.comment = takeComment();
    std::string_view rest = trim(body.substr(6));
    std::size_t open = rest.find(" on [");
    std::size_t close = rest.find(']', open == std::string_view::npos ? 0 : open);
    if (open == std::string_view::npos || close == std::string_view::npos) fail("expected 'on [lo,hi]'");
    auto head = splitSpaces(rest.substr(0, open));
    if (head.size() != 3) fail("expected '<kind> <curve> <curve>'");
    if (head[0] == "geq") {
      c.kind = ClaimKind::kGeq;
    } else if (head[0] == "geqc") {
      c.kind = ClaimKind::kGeqc;
    } else if (head[0] == "leqc") {
      c.kind = ClaimKind::kLeqc;
    } else {
      fail("unknown claim kind '" + std::string(head[0]) + "'");
    }
    c.lhs = guarded([&] { return parseBranch(head[1]); });
    if (c.kind == ClaimKind::kGeq) {
      c.rhs = guarded([&] { return parseBranch(head[2]); });
    } else {
      c.level = guarded([&] { return parseRational(head[2]); });
    }
    std::string_view bounds = rest.substr(open + 5, close - open - 5);
    std::size_t comma = bounds.find(',');
    if (comma == std::string_view::npos) fail("interval needs two bounds");
    c.on = guarded([&] {
      return Interval(ExactNumber::parse(bounds.substr(0, comma)), ExactNumber::parse(bounds.substr(comma + 1)));
    });
    bool saw_poly = false;
    bool saw_case = false;
    for (std::string_view tok : splitSpaces(rest.substr(close + 1))) {
      if (startsWith(tok, "poly=")) {
        std::string_view p = tok.substr(5);
        if (p != "none") c.poly = guarded([&] { return Poly::parse(p); });
        saw_poly = true;
      } else if (startsWith(tok, "case=")) {
        c.label = guarded([&] { return parseCaseLabel(tok.substr(5)); });
        saw_case = true;
      } else {
        fail("unexpected claim field '" + std::string(tok) + "'");
      }
    }
    if (!saw_poly || !saw_case) fail("claim needs poly= and case=");
    cert_.claims.push_back(std::move(c));
  }

  std::string_view text_;
  int line_ = 0;
  std::string pending_;
  Certificate cert_;
};

}  // namespace

Locus Locus::parse(std::string_view text) {
  Locus l;
  if (startsWith(text, "x=") || startsWith(text, "y=")) {
    l.kind = text.front() == 'x' ? Kind::kVertical : Kind::kHorizontal;
    l.c = parseRational(text.substr(2));
  } else {
    l.kind = Kind::kBranch;
    l.branch = parseBranch(text);
  }
  return l;
}

std::string Locus::str() const {
  switch (kind) {
    case Kind::kBranch: return toString(branch);
    case Kind::kVertical: return "x=" + c.get_str();
    case Kind::kHorizontal: return "y=" + c.get_str();
  }
  return "?";
}

const CertPoint* Certificate::findPoint(std::string_view label) const {
  for (const CertPoint& p : points) {
    if (p.label == label) return &p;
  }
  return nullptr;
}

Certificate parseCertificate(std::string_view text) { return Parser(text).run(); }

std::string serializeCertificate(const Certificate& cert) {
  std::ostringstream out;
  emitComment(out, cert.comment);
  out << "field m=" << cert.m << " M=" << cert.M.get_str() << "\n";
  if (!cert.points.empty()) out << "\n";
  for (const CertPoint& p : cert.points) {
    emitComment(out, p.comment);
    out << "point " << p.label << " x=" << p.at.x.str() << " y=" << p.at.y.str();
    if (!p.on.empty()) {
      out << " on=";
      for (std::size_t i = 0; i < p.on.size(); ++i) out << (i ? ";" : "") << p.on[i].str();
    }
    out << "\n";
  }
  if (!cert.pairs.empty()) out << "\n";
  for (const Shift& s : cert.pairs) out << "pair " << s.u << " " << s.v << "\n";
  for (const Region& r : cert.regions) {
    out << "\n";
    emitComment(out, r.comment);
    out << "region owner=(" << r.owner.u << "," << r.owner.v << "):";
    for (const RegionItem& item : r.items) out << " " << itemText(item);
    out << "\n";
  }
  if (!cert.claims.empty()) out << "\n";
  for (const Claim& c : cert.claims) {
    emitComment(out, c.comment);
    out << "claim " << claimKindName(c.kind) << " " << toString(c.lhs) << " "
        << (c.kind == ClaimKind::kGeq ? toString(c.rhs) : c.level.get_str()) << " on [" << c.on.lo.str() << ","
        << c.on.hi.str() << "] poly=" << (c.poly ? c.poly->str() : std::string("none"))
        << " case=" << toString(c.label) << "\n";
  }
  if (!cert.trailer.empty()) {
    out << "\n";
    emitComment(out, cert.trailer);
  }
  return out.str();
}

Certificate loadCertificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open certificate '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseCertificate(buffer.str());
}

}  // namespace qeuclid
