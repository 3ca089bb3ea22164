#include "qeuclid/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace qeuclid {

Poly::Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> coefficients(static_cast<std::size_t>(degree) + 1);
  coefficients.back() = c;
  return Poly(std::move(coefficients));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& a) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
  return acc;
}

ExactNumber Poly::eval(const ExactNumber& a) const {
  ExactNumber acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + ExactNumber(*it);
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(out));
}

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] += p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) out[i] += q.c_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.isZero() || q.isZero()) return {};
  std::vector<Rational> out(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const Poly& p, const Rational& s) {
  std::vector<Rational> out = p.c_;
  for (Rational& c : out) c *= s;
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& p, const Poly& d) {
  if (d.isZero()) throw std::domain_error("polynomial division by zero");
  Poly quotient;
  Poly rest = p;
  while (!rest.isZero() && rest.degree() >= d.degree()) {
    Poly step = monomial(rest.leading() / d.leading(), rest.degree() - d.degree());
    quotient = quotient + step;
    rest = rest - step * d;
  }
  return {quotient, rest};
}

Poly Poly::gcd(Poly p, Poly q) {
  while (!q.isZero()) {
    Poly r = divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  if (p.isZero()) return p;
  return p * Rational(1 / p.leading());
}

Poly Poly::primitive() const {
  if (isZero()) return {};
  Integer den = 1;
  for (const Rational& c : c_) den = lcm(den, Integer(c.get_den()));
  Integer content = 0;
  for (const Rational& c : c_) {
    Integer scaled = c.get_num() * (den / c.get_den());
    content = ::gcd(content, scaled);
  }
  Rational scale(den, content);
  scale.canonicalize();
  return *this * scale;
}

std::string Poly::str(char var) const {
  if (isZero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    Rational magnitude = abs(c);
    if (i == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly Poly::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    return std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw fail("empty");
  Poly out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    int sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw fail("expected '+' or '-'");
    }
    std::size_t start = pos;
    while (pos < compact.size() && (std::isdigit(static_cast<unsigned char>(compact[pos])) || compact[pos] == '/')) ++pos;
    Rational c = start == pos ? Rational(1) : parseRational(std::string_view(compact).substr(start, pos - start));
    bool had_number = start != pos;
    int degree = 0;
    if (pos < compact.size() && compact[pos] == '*') {
      if (!had_number) throw fail("dangling '*'");
      ++pos;
    }
    if (pos < compact.size() && std::isalpha(static_cast<unsigned char>(compact[pos]))) {
      if (compact[pos] != 'a') throw fail("the variable is 'a'");
      ++pos;
      degree = 1;
      if (pos < compact.size() && compact[pos] == '^') {
        ++pos;
        std::size_t e = pos;
        while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
        if (e == pos) throw fail("missing exponent");
        degree = std::stoi(compact.substr(e, pos - e));
      }
    } else if (!had_number) {
      throw fail("empty term");
    }
    out = out + monomial(c * sign, degree);
  }
  return out;
}

bool positivelyProportional(const Poly& p, const Poly& q) {
  if (p.isZero() || q.isZero()) return p.isZero() && q.isZero();
  if (p.degree() != q.degree()) return false;
  return p.primitive() == q.primitive();
}

}  // namespace qeuclid
