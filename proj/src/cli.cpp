#include "qeuclid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qeuclid/plot.hpp"

namespace qeuclid::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<std::string, std::string> splitPair(const std::string& text, const char* flag) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError(std::string(flag) + " expects two comma-separated values, got '" + text + "'");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

Rational rationalArg(const std::string& text, const char* flag) {
  try {
    return parseRational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

RationalPoint rationalPairArg(const std::string& text, const char* flag) {
  auto [a, b] = splitPair(text, flag);
  return {rationalArg(a, flag), rationalArg(b, flag)};
}

RingElement ringArg(const std::string& text, const char* flag) {
  RationalPoint p = rationalPairArg(text, flag);
  if (p.x.get_den() != 1 || p.y.get_den() != 1) throw UsageError(std::string(flag) + " expects integers x,y");
  return {p.x.get_num(), p.y.get_num()};
}

FieldData builtinArg(int m) {
  try {
    return builtinField(m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// The builtin row for m, or a bare family when --M overrides the covering radius.
Family familyArg(int m, const std::string& M_text) {
  if (M_text.empty()) return Family::of(builtinArg(m));
  Rational M = rationalArg(M_text, "--M");
  try {
    return Family::of(customField(m, M, {}, {}));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Certificate loadArg(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot read certificate '" + path + "'");
  return loadCertificate(path);
}

void writeOutput(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

json ringJson(const RingElement& r) { return {{"x", r.x.get_str()}, {"y", r.y.get_str()}}; }
RingElement ringFrom(const json& j) {
  return {Integer(j.at("x").get<std::string>()), Integer(j.at("y").get<std::string>())};
}
json pairJson(const Shift& s) { return json::array({s.u, s.v}); }
Shift pairFrom(const json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }
Rational ratFrom(const json& j) { return parseRational(j.get<std::string>()); }

std::string signChar(int s) { return s > 0 ? "+1" : "-1"; }

int cmdDivide(int m, const std::string& xi_text, bool all_pairs, const std::string& format, std::ostream& out) {
  FieldData F = builtinArg(m);
  RationalPoint p = rationalPairArg(xi_text, "--xi");
  DivideOutput d{m, {p.x, p.y}, {}};
  d.result = divide(F, d.xi, {all_pairs});
  if (format == "json") {
    out << toJson(d).dump(2) << '\n';
  } else {
    out << "xi = " << d.xi.a << " + " << d.xi.b << "*sqrt(" << m << ")\n"
        << "quotient = " << d.result.quotient.x << " + " << d.result.quotient.y << "*sqrt(" << m << ")\n"
        << "remainder norm = " << d.result.remainderNorm << "\n"
        << "pair = (" << d.result.pairUsed.u << "," << d.result.pairUsed.v << ")\n"
        << "signs = (" << signChar(d.result.signA) << "," << signChar(d.result.signB) << ")\n";
  }
  return kExitOk;
}

int cmdGcd(int m, const std::string& alpha_text, const std::string& beta_text, const std::string& format,
           std::ostream& out) {
  FieldData F = builtinArg(m);
  GcdOutput g{m, ringArg(alpha_text, "--alpha"), ringArg(beta_text, "--beta"), {}};
  if (g.alpha.isZero() && g.beta.isZero()) throw UsageError("gcd(0, 0) is undefined");
  g.result = gcdWithSteps(F, g.alpha, g.beta);
  if (format == "json") {
    out << toJson(g).dump(2) << '\n';
  } else {
    out << "gcd = " << g.result.gcd.x << " + " << g.result.gcd.y << "*sqrt(" << m << ")\n"
        << "norm = " << norm(m, g.result.gcd) << "\n"
        << "steps = " << g.result.steps << "\n";
  }
  return kExitOk;
}

int cmdCoverset(int m, const std::string& M_text, const std::string& p_text, std::int64_t bound,
                const std::string& format, std::ostream& out) {
  Family fam = familyArg(m, M_text);
  if (bound < 0) throw UsageError("--bound must be nonnegative");
  CoversetOutput c{m, fam.M, rationalPairArg(p_text, "--p"), bound, {}};
  c.pairs = coverSet(fam, c.p, bound);
  if (format == "json") {
    out << toJson(c).dump(2) << '\n';
  } else {
    out << c.pairs.size() << " pair(s) with |f(p + (u,v))| <= " << c.M << ", |u|,|v| <= " << bound << ":\n";
    for (const Shift& s : c.pairs) out << "  (" << s.u << "," << s.v << ")\n";
  }
  return kExitOk;
}

int cmdSearch(int m, const std::string& M_text, std::int64_t bound, std::size_t budget, const std::string& path,
              const std::string& format, std::ostream& out, std::ostream& err) {
  Family fam = familyArg(m, M_text);
  SearchConfig config;
  config.bound = bound;
  config.maxRegions = budget;
  SearchResult found = search(fam, config);
  SearchOutput s{m, fam.M, found.complete, false, found.residue, found.certificate};
  s.verified = s.complete && verify(s.certificate).ok();
  if (!path.empty()) writeOutput(path, serializeCertificate(s.certificate), out);
  if (format == "json") {
    out << toJson(s).dump(2) << '\n';
  } else {
    if (path.empty()) out << serializeCertificate(s.certificate);
    err << s.certificate.regions.size() << " region(s), " << s.certificate.pairs.size() << " pair(s); "
        << (s.complete ? "complete" : "INCOMPLETE") << ", " << (s.verified ? "verified" : "not verified") << "\n";
    for (const std::string& r : s.residue) err << "  uncovered " << r << "\n";
  }
  return s.verified ? kExitOk : kExitFailed;
}

int cmdVerify(const std::string& path, bool strict, const std::string& format, std::ostream& out,
              std::ostream& err) {
  Certificate cert;
  try {
    cert = loadArg(path);
  } catch (const CertificateError& e) {
    err << path << ": " << e.what() << "\n";
    return kExitFailed;
  }
  VerificationReport report = verify(cert, {!strict});
  if (format == "json") {
    out << toJson(report).dump(2) << '\n';
  } else {
    out << report.str();
  }
  return report.ok() ? kExitOk : kExitFailed;
}

int cmdPlot(const std::string& path, const std::string& out_path, std::string format, std::ostream& out,
            std::ostream& err) {
  if (format.empty() || format == "text") {
    format = std::filesystem::path(out_path).extension() == ".tex" ? "tikz" : "svg";
  }
  if (format != "svg" && format != "tikz") throw UsageError("plot supports --format svg or tikz");
  Certificate cert;
  try {
    cert = loadArg(path);
  } catch (const CertificateError& e) {
    err << path << ": " << e.what() << "\n";
    return kExitFailed;
  }
  writeOutput(out_path, renderFigure(cert, format == "tikz" ? FigureFormat::kTikz : FigureFormat::kSvg), out);
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact norm-Euclidean division and covering certificates for real quadratic fields", "qeuclid"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int m = 0;
  std::string format = "text", xi, alpha, beta, point, M_text, cert_path, out_path;
  std::int64_t bound = 100;
  std::size_t budget = 2000;
  bool all_pairs = false, strict = false;
  auto addFormat = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
  };

  CLI::App* divide_cmd = app.add_subcommand("divide", "Divide xi = a + b*sqrt(m) by the nearest ring integer");
  divide_cmd->add_option("-m", m, "Field Q(sqrt m)")->required();
  divide_cmd->add_option("--xi", xi, "a,b as p/q rationals")->required();
  divide_cmd->add_flag("--all-pairs", all_pairs, "Scan every pair and keep the smallest |norm|");
  addFormat(divide_cmd, {"text", "json"});

  CLI::App* gcd_cmd = app.add_subcommand("gcd", "Euclidean gcd in Z[sqrt m]");
  gcd_cmd->add_option("-m", m, "Field Q(sqrt m)")->required();
  gcd_cmd->add_option("--alpha", alpha, "x,y integers")->required();
  gcd_cmd->add_option("--beta", beta, "x,y integers")->required();
  addFormat(gcd_cmd, {"text", "json"});

  CLI::App* coverset_cmd = app.add_subcommand("coverset", "List the shifts covering a rational point");
  coverset_cmd->add_option("-m", m, "Field Q(sqrt m)")->required();
  coverset_cmd->add_option("--p", point, "x,y as p/q rationals")->required();
  coverset_cmd->add_option("--bound", bound, "Scan |u|, |v| <= bound");
  coverset_cmd->add_option("--M", M_text, "Covering radius p/q (default: the field's M1)");
  addFormat(coverset_cmd, {"text", "json"});

  CLI::App* search_cmd = app.add_subcommand("search", "Search for a covering certificate of S0");
  search_cmd->add_option("-m", m, "Field Q(sqrt m)")->required();
  search_cmd->add_option("--M", M_text, "Covering radius p/q (default: the field's M1)");
  search_cmd->add_option("--bound", bound, "Shift bound for vertex cover sets");
  search_cmd->add_option("--budget", budget, "Maximum number of regions");
  search_cmd->add_option("--out", out_path, "Write the certificate here");
  addFormat(search_cmd, {"text", "json"});

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a covering certificate");
  verify_cmd->add_option("certificate", cert_path, "Certificate file")->required();
  verify_cmd->add_flag("--strict", strict, "Every comparison must be a claim in the file");
  addFormat(verify_cmd, {"text", "json"});

  CLI::App* plot_cmd = app.add_subcommand("plot", "Draw a certificate as SVG or standalone TikZ");
  plot_cmd->add_option("certificate", cert_path, "Certificate file")->required();
  plot_cmd->add_option("--out", out_path, "Output file (.svg or .tex); stdout when omitted");
  format.clear();
  addFormat(plot_cmd, {"svg", "tikz"});

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (format.empty() && !plot_cmd->parsed()) format = "text";

  try {
    if (divide_cmd->parsed()) return cmdDivide(m, xi, all_pairs, format, out);
    if (gcd_cmd->parsed()) return cmdGcd(m, alpha, beta, format, out);
    if (coverset_cmd->parsed()) return cmdCoverset(m, M_text, point, bound, format, out);
    if (search_cmd->parsed()) return cmdSearch(m, M_text, bound, budget, out_path, format, out, err);
    if (verify_cmd->parsed()) return cmdVerify(cert_path, strict, format, out, err);
    if (plot_cmd->parsed()) return cmdPlot(cert_path, out_path, format, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

json toJson(const DivideOutput& d) {
  return {{"command", "divide"},
          {"m", d.m},
          {"xi", {{"a", d.xi.a.get_str()}, {"b", d.xi.b.get_str()}}},
          {"quotient", ringJson(d.result.quotient)},
          {"remainderNorm", d.result.remainderNorm.get_str()},
          {"pair", pairJson(d.result.pairUsed)},
          {"signs", json::array({d.result.signA, d.result.signB})}};
}

DivideOutput divideFromJson(const json& j) {
  DivideOutput d;
  d.m = j.at("m").get<int>();
  d.xi = {ratFrom(j.at("xi").at("a")), ratFrom(j.at("xi").at("b"))};
  d.result.quotient = ringFrom(j.at("quotient"));
  d.result.remainderNorm = ratFrom(j.at("remainderNorm"));
  d.result.pairUsed = pairFrom(j.at("pair"));
  d.result.signA = j.at("signs").at(0).get<int>();
  d.result.signB = j.at("signs").at(1).get<int>();
  return d;
}

json toJson(const GcdOutput& g) {
  return {{"command", "gcd"},         {"m", g.m},
          {"alpha", ringJson(g.alpha)}, {"beta", ringJson(g.beta)},
          {"gcd", ringJson(g.result.gcd)}, {"steps", g.result.steps}};
}

GcdOutput gcdFromJson(const json& j) {
  GcdOutput g;
  g.m = j.at("m").get<int>();
  g.alpha = ringFrom(j.at("alpha"));
  g.beta = ringFrom(j.at("beta"));
  g.result.gcd = ringFrom(j.at("gcd"));
  g.result.steps = j.at("steps").get<std::size_t>();
  return g;
}

json toJson(const CoversetOutput& c) {
  json pairs = json::array();
  for (const Shift& s : c.pairs) pairs.push_back(pairJson(s));
  return {{"command", "coverset"},
          {"m", c.m},
          {"M", c.M.get_str()},
          {"p", {{"x", c.p.x.get_str()}, {"y", c.p.y.get_str()}}},
          {"bound", c.bound},
          {"pairs", pairs}};
}

CoversetOutput coversetFromJson(const json& j) {
  CoversetOutput c;
  c.m = j.at("m").get<int>();
  c.M = ratFrom(j.at("M"));
  c.p = {ratFrom(j.at("p").at("x")), ratFrom(j.at("p").at("y"))};
  c.bound = j.at("bound").get<std::int64_t>();
  for (const json& p : j.at("pairs")) c.pairs.push_back(pairFrom(p));
  return c;
}

json toJson(const VerificationReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.results) {
    checks.push_back({{"check", c.check}, {"subject", c.subject}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"command", "verify"}, {"verified", r.ok()}, {"failures", r.failures()}, {"checks", checks}};
}

VerificationReport reportFromJson(const json& j) {
  VerificationReport r;
  for (const json& c : j.at("checks")) {
    r.results.push_back({c.at("check").get<std::string>(), c.at("subject").get<std::string>(),
                         c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  }
  return r;
}

json toJson(const SearchOutput& s) {
  return {{"command", "search"},
          {"m", s.m},
          {"M", s.M.get_str()},
          {"complete", s.complete},
          {"verified", s.verified},
          {"residue", s.residue},
          {"certificate", serializeCertificate(s.certificate)}};
}

SearchOutput searchFromJson(const json& j) {
  SearchOutput s;
  s.m = j.at("m").get<int>();
  s.M = ratFrom(j.at("M"));
  s.complete = j.at("complete").get<bool>();
  s.verified = j.at("verified").get<bool>();
  s.residue = j.at("residue").get<std::vector<std::string>>();
  s.certificate = parseCertificate(j.at("certificate").get<std::string>());
  return s;
}

}  // namespace qeuclid::cli
