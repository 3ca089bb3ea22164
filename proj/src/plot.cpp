#include "qeuclid/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <sstream>
#include <utility>
#include <vector>

#include "covering_internal.hpp"

namespace qeuclid {

namespace {

using XY = std::pair<double, double>;

constexpr int kArcSamples = 48;

double toDouble(const ExactNumber& x) {
  RationalInterval r = enclose(x, 60);
  return Rational((r.lo + r.hi) / 2).get_d();
}

double branchAt(const Branch& b, double m, double M, double a) {
  double shifted = a + static_cast<double>(b.u);
  double radicand = (shifted * shifted - b.epsilon * M) / m;
  return -static_cast<double>(b.v) + b.theta * std::sqrt(std::max(0.0, radicand));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

std::string pointName(const CertPoint& p) { return p.isCritical() ? "P_" + p.label : "P" + p.label; }

std::string pairName(const Shift& s) { return "(" + std::to_string(s.u) + "," + std::to_string(s.v) + ")"; }

// Closed outline of a region, arcs sampled uniformly in x.
std::vector<XY> outline(const Certificate& cert, const Region& region) {
  const double m = cert.m, M = cert.M.get_d();
  std::vector<XY> pts;
  for (const detail::Edge& e : detail::regionEdges(cert, region)) {
    XY from{toDouble(e.from->at.x), toDouble(e.from->at.y)};
    XY to{toDouble(e.to->at.x), toDouble(e.to->at.y)};
    pts.push_back(from);
    if (!e.arc) continue;
    for (int i = 1; i < kArcSamples; ++i) {
      double a = from.first + (to.first - from.first) * i / kArcSamples;
      pts.emplace_back(a, branchAt(*e.arc, m, M, a));
    }
  }
  return pts;
}

// Area centroid of a simple polygon, falling back to the vertex mean when it is degenerate.
XY centroid(const std::vector<XY>& poly) {
  double area = 0, cx = 0, cy = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const XY& p = poly[i];
    const XY& q = poly[(i + 1) % poly.size()];
    double cross = p.first * q.second - q.first * p.second;
    area += cross;
    cx += (p.first + q.first) * cross;
    cy += (p.second + q.second) * cross;
  }
  if (std::fabs(area) < 1e-12) {
    cx = cy = 0;
    for (const XY& p : poly) {
      cx += p.first;
      cy += p.second;
    }
    return {cx / poly.size(), cy / poly.size()};
  }
  return {cx / (3 * area), cy / (3 * area)};
}

// Light fills cycled by region index.
const char* kFills[] = {"#cfe2f3", "#f4cccc", "#d9ead3", "#fff2cc", "#d9d2e9", "#fce5cd", "#d0e0e3", "#ead1dc"};

class SvgWriter {
 public:
  static constexpr double kScale = 1000;
  static constexpr double kMargin = 60;

  double sx(double x) const { return kMargin + x * kScale; }
  double sy(double y) const { return kMargin + (0.5 - y) * kScale; }

  std::string render(const Certificate& cert) {
    const double size = 0.5 * kScale + 2 * kMargin;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\"" << fmt(size)
         << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
    if (cert.m != 0) out_ << "<title>Q(sqrt " << cert.m << "), M = " << toString(cert.M) << "</title>\n";
    out_ << "<rect class=\"square\" x=\"" << fmt(sx(0)) << "\" y=\"" << fmt(sy(0.5)) << "\" width=\""
         << fmt(0.5 * kScale) << "\" height=\"" << fmt(0.5 * kScale) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < cert.regions.size(); ++i) {
      const Region& r = cert.regions[i];
      std::vector<XY> poly = outline(cert, r);
      out_ << "<path class=\"region\" data-owner=\"" << pairName(r.owner) << "\" fill=\""
           << kFills[i % std::size(kFills)] << "\" stroke=\"#444\" stroke-width=\"1\" d=\"";
      for (std::size_t k = 0; k < poly.size(); ++k) {
        out_ << (k == 0 ? "M" : " L") << fmt(sx(poly[k].first)) << ',' << fmt(sy(poly[k].second));
      }
      out_ << " Z\"/>\n";
      XY c = centroid(poly);
      out_ << "<text class=\"owner\" x=\"" << fmt(sx(c.first)) << "\" y=\"" << fmt(sy(c.second))
           << "\" font-size=\"12\" text-anchor=\"middle\">" << pairName(r.owner) << "</text>\n";
    }
    for (const CertPoint& p : cert.points) {
      double x = sx(toDouble(p.at.x)), y = sy(toDouble(p.at.y));
      out_ << "<circle class=\"point\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\"/>\n"
           << "<text class=\"label\" x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5) << "\" font-size=\"11\">"
           << pointName(p) << "</text>\n";
    }
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

std::string tikzLabel(const CertPoint& p) { return "$P_{" + p.label + "}$"; }

std::string renderTikz(const Certificate& cert) {
  std::ostringstream out;
  out << "\\documentclass[tikz,border=4pt]{standalone}\n\\begin{document}\n"
      << "\\begin{tikzpicture}[scale=12]\n"
      << "\\draw (0,0) rectangle (0.5,0.5);\n";
  for (std::size_t i = 0; i < cert.regions.size(); ++i) {
    const Region& r = cert.regions[i];
    std::vector<XY> poly = outline(cert, r);
    std::string color = kFills[i % std::size(kFills)] + 1;  // drop '#'
    out << "\\definecolor{region" << i << "}{HTML}{" << color << "}\n";
    out << "\\filldraw[fill=region" << i << ", draw=black!70, line width=0.3pt] ";
    for (std::size_t k = 0; k < poly.size(); ++k) {
      out << (k == 0 ? "" : " -- ") << '(' << fmt(poly[k].first) << ',' << fmt(poly[k].second) << ')';
    }
    out << " -- cycle;\n";
    XY c = centroid(poly);
    out << "\\node[font=\\tiny] at (" << fmt(c.first) << ',' << fmt(c.second) << ") {$" << pairName(r.owner)
        << "$};\n";
  }
  for (const CertPoint& p : cert.points) {
    double x = toDouble(p.at.x), y = toDouble(p.at.y);
    out << "\\fill (" << fmt(x) << ',' << fmt(y) << ") circle (0.15pt) node[above right, font=\\tiny] {"
        << tikzLabel(p) << "};\n";
  }
  out << "\\end{tikzpicture}\n\\end{document}\n";
  return out.str();
}

}  // namespace

std::string renderFigure(const Certificate& cert, FigureFormat format) {
  if (format == FigureFormat::kTikz) return renderTikz(cert);
  return SvgWriter().render(cert);
}

}  // namespace qeuclid
