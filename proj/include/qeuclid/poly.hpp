#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qeuclid/exact.hpp"

namespace qeuclid {

// Univariate polynomial over Q, coefficients in ascending degree with trailing zeros
// stripped, so the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> ascending);
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(1, 1); }

  // Reads "28*a^2+56*a-39" style text in the variable 'a' ("28a^2" is accepted too).
  static Poly parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& a) const;
  ExactNumber eval(const ExactNumber& a) const;
  Poly derivative() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Rational& s);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Euclidean division p = q * d + r with deg r < deg d.
  static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d);
  static Poly gcd(Poly p, Poly q);  // monic, or zero

  // The unique positive multiple with integer coefficients of content 1.
  Poly primitive() const;
  std::string str(char var = 'a') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// True iff p = lambda * q for some rational lambda > 0 (both zero counts as true).
bool positivelyProportional(const Poly& p, const Poly& q);

}  // namespace qeuclid
