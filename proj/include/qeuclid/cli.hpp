#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qeuclid/covering.hpp"
#include "qeuclid/division.hpp"
#include "qeuclid/field.hpp"

namespace qeuclid::cli {

// Exit codes of every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failed, search incomplete, division impossible
inline constexpr int kExitUsage = 2;   // bad flags, unknown field, unreadable file

// Runs one command line (without the program name) and returns its exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

using nlohmann::json;

struct DivideOutput {
  int m = 0;
  FieldElement xi;
  DivisionResult result;
};

struct GcdOutput {
  int m = 0;
  RingElement alpha;
  RingElement beta;
  GcdResult result;
};

struct CoversetOutput {
  int m = 0;
  Rational M;
  RationalPoint p;
  std::int64_t bound = 0;
  std::vector<Shift> pairs;
};

struct SearchOutput {
  int m = 0;
  Rational M;
  bool complete = false;
  bool verified = false;
  std::vector<std::string> residue;
  Certificate certificate;
};

// JSON encodings used by --format json. Rationals travel as "p/q" strings so nothing is
// rounded; each decoder inverts its encoder.
json toJson(const DivideOutput& d);
json toJson(const GcdOutput& g);
json toJson(const CoversetOutput& c);
json toJson(const VerificationReport& r);
json toJson(const SearchOutput& s);
DivideOutput divideFromJson(const json& j);
GcdOutput gcdFromJson(const json& j);
CoversetOutput coversetFromJson(const json& j);
VerificationReport reportFromJson(const json& j);
SearchOutput searchFromJson(const json& j);

}  // namespace qeuclid::cli
