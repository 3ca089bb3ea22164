#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qeuclid {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading sign. Decimals are rejected on purpose.
Rational parseRational(std::string_view text);
std::string toString(const Rational& q);
std::string toString(const Integer& z);

// Splits n > 0 as square * core. The core is squarefree whenever every prime up to
// cbrt(core) could be tried below the trial bound; otherwise a residual factor may
// keep a square, which is harmless because the form stays canonical.
struct SquareSplit {
  Integer square_root;  // s with n = s^2 * core
  Integer core;
};
inline constexpr unsigned long kDefaultTrialBound = 1'000'000;
SquareSplit splitSquare(const Integer& n, unsigned long trial_bound = kDefaultTrialBound);

struct RadicalTerm {
  Rational coefficient;
  Integer radicand;  // > 1, squarefree up to the trial bound

  friend bool operator==(const RadicalTerm&, const RadicalTerm&) = default;
};

struct RationalInterval {
  Rational lo;
  Rational hi;
};

// rational + sum coefficient_i * sqrt(radicand_i), canonical: terms sorted by radicand,
// radicands pairwise distinct, no zero coefficients. Canonical form makes structural
// equality coincide with equality of real values.
class ExactNumber {
 public:
  ExactNumber() = default;
  ExactNumber(const Rational& q) : rational_(q) {}  // NOLINT(google-explicit-constructor)
  ExactNumber(long n) : rational_(n) {}             // NOLINT(google-explicit-constructor)

  // Builds rational + sum c * sqrt(y) for rational y >= 0. Throws std::domain_error on y < 0.
  static ExactNumber normalize(const Rational& rational,
                               std::span<const std::pair<Rational, Rational>> raw_terms,
                               unsigned long trial_bound = kDefaultTrialBound);
  static ExactNumber sqrt(const Rational& y);
  static ExactNumber parse(std::string_view text);

  const Rational& rationalPart() const { return rational_; }
  std::span<const RadicalTerm> terms() const { return terms_; }
  bool isRational() const { return terms_.empty(); }
  std::size_t radicalCount() const { return terms_.size(); }
  bool isZero() const { return terms_.empty() && sgn(rational_) == 0; }

  ExactNumber operator-() const;
  // Same radicands with coefficient i multiplied by signs[i] (each +1 or -1) and the rational
  // part by rational_sign. Stays canonical, so no radicand is factored again.
  ExactNumber withSigns(int rational_sign, std::span<const int> signs) const;
  friend ExactNumber operator+(const ExactNumber& a, const ExactNumber& b);
  friend ExactNumber operator-(const ExactNumber& a, const ExactNumber& b);
  friend ExactNumber operator*(const ExactNumber& a, const ExactNumber& b);
  friend ExactNumber operator*(const ExactNumber& a, const Rational& q);
  friend ExactNumber operator/(const ExactNumber& a, const Rational& q);
  ExactNumber& operator+=(const ExactNumber& b) { return *this = *this + b; }
  ExactNumber& operator-=(const ExactNumber& b) { return *this = *this - b; }
  ExactNumber& operator*=(const ExactNumber& b) { return *this = *this * b; }

  friend bool operator==(const ExactNumber&, const ExactNumber&) = default;
  friend std::strong_ordering operator<=>(const ExactNumber& a, const ExactNumber& b);

  std::string str() const;

 private:
  static ExactNumber fromSorted(Rational rational, std::vector<RadicalTerm> terms);

  Rational rational_;
  std::vector<RadicalTerm> terms_;
};

int signOf(const ExactNumber& x);
std::strong_ordering cmp(const ExactNumber& a, const ExactNumber& b);

// x0 + sum |c_i| sqrt(y_i). Positive whenever x has a radical term.
ExactNumber absConjugate(const ExactNumber& x);

// Product of all conjugates obtained by flipping the signs of radicals over a coprime
// base of the radicands. Rational, and zero exactly when x is zero.
Rational conjugateNorm(const ExactNumber& x);

// Rational enclosure of x, each sqrt bounded to within 2^-bits.
RationalInterval enclose(const ExactNumber& x, unsigned bits);

// Square root of x when it denests into the same representation: x rational, or
// x = A + B sqrt(n) with A^2 - B^2 n a rational square. Returns nullopt otherwise or when
// x < 0.
std::optional<ExactNumber> sqrtExact(const ExactNumber& x);

}  // namespace qeuclid
