#include "qeuclid/exact.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace qeuclid {

namespace {

const std::vector<unsigned long>& smallPrimes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kDefaultTrialBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kDefaultTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kDefaultTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

using TermMap = std::map<Integer, Rational>;

void accumulate(TermMap& acc, Rational& rational, const Integer& radicand, const Rational& c) {
  if (radicand == 1) {
    rational += c;
    return;
  }
  auto [it, inserted] = acc.try_emplace(radicand, c);
  if (!inserted) it->second += c;
}

std::vector<RadicalTerm> collect(const TermMap& acc) {
  std::vector<RadicalTerm> out;
  out.reserve(acc.size());
  for (const auto& [radicand, c] : acc) {
    if (sgn(c) != 0) out.push_back({c, radicand});
  }
  return out;
}

// Multiplies sqrt(y1) * sqrt(y2) for squarefree y1, y2 without factoring:
// with g = gcd(y1, y2), the product is g * sqrt((y1/g) * (y2/g)).
std::pair<Integer, Integer> radicalProduct(const Integer& y1, const Integer& y2) {
  Integer g = gcd(y1, y2);
  Integer r = (y1 / g) * (y2 / g);
  return {g, r};
}

std::vector<Integer> coprimeBase(std::vector<Integer> values) {
  std::set<Integer> base(values.begin(), values.end());
  base.erase(Integer(1));
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto i = base.begin(); i != base.end() && !changed; ++i) {
      for (auto j = std::next(i); j != base.end(); ++j) {
        Integer g = gcd(*i, *j);
        if (g == 1) continue;
        Integer p = *i / g;
        Integer q = *j / g;
        Integer gi = *i;
        Integer gj = *j;
        base.erase(gi);
        base.erase(gj);
        for (const Integer* z : {&g, &p, &q}) {
          if (*z != 1) base.insert(*z);
        }
        changed = true;
        break;
      }
    }
  }
  return {base.begin(), base.end()};
}

ExactNumber flipAtom(const ExactNumber& x, const Integer& atom) {
  std::vector<int> signs;
  for (const RadicalTerm& t : x.terms()) {
    signs.push_back(mpz_divisible_p(t.radicand.get_mpz_t(), atom.get_mpz_t()) != 0 ? -1 : 1);
  }
  return x.withSigns(1, signs);
}

int signByRefinement(const ExactNumber& x) {
  if (sgn(conjugateNorm(x)) == 0) return 0;
  for (unsigned bits = 32;; bits *= 2) {
    RationalInterval iv = enclose(x, bits);
    if (sgn(iv.lo) > 0) return 1;
    if (sgn(iv.hi) < 0) return -1;
  }
}

// Recursive-descent reader for the ExactNumber grammar.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  ExactNumber parseExpression() {
    skipSpace();
    Rational rational;
    TermMap acc;
    bool first = true;
    while (true) {
      skipSpace();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skipSpace();
      } else if (!first) {
        break;
      }
      auto [coefficient, radicand] = parseTerm();
      coefficient *= sign;
      if (radicand) {
        ExactNumber term = ExactNumber::normalize(0, std::vector{std::pair{coefficient, *radicand}});
        rational += term.rationalPart();
        for (const RadicalTerm& t : term.terms()) accumulate(acc, rational, t.radicand, t.coefficient);
      } else {
        rational += coefficient;
      }
      first = false;
      skipSpace();
      if (pos_ == text_.size()) break;
    }
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    std::vector<std::pair<Rational, Rational>> raw;
    for (const auto& [r, c] : acc) raw.emplace_back(c, Rational(r));
    return ExactNumber::normalize(rational, raw);
  }

 private:
  std::pair<Rational, std::optional<Rational>> parseTerm() {
    if (startsWithSqrt()) return {Rational(1), parseSqrt()};
    Rational c = parseUnsignedRational();
    skipSpace();
    if (peek() == '*') {
      ++pos_;
      skipSpace();
      if (!startsWithSqrt()) fail("expected sqrt after '*'");
      return {c, parseSqrt()};
    }
    return {c, std::nullopt};
  }

  bool startsWithSqrt() const { return text_.substr(pos_, 4) == "sqrt"; }

  Rational parseSqrt() {
    pos_ += 4;
    skipSpace();
    if (get() != '(') fail("expected '(' after sqrt");
    skipSpace();
    Rational y = parseUnsignedRational();
    skipSpace();
    if (get() != ')') fail("expected ')'");
    return y;
  }

  Rational parseUnsignedRational() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a rational");
    return parseRational(text_.substr(start, pos_ - start));
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse exact number '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parseRational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational p/q: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  };
  if (!digits(num) || !digits(den)) throw bad();
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string toString(const Rational& q) { return q.get_str(); }
std::string toString(const Integer& z) { return z.get_str(); }

SquareSplit splitSquare(const Integer& n, unsigned long trial_bound) {
  if (sgn(n) <= 0) throw std::domain_error("splitSquare expects a positive integer");
  Integer rest = n;
  Integer root = 1;
  // 'core' accumulates odd-multiplicity primes; 'rest' keeps the untried cofactor.
  Integer core = 1;
  auto tryPrimeSplit = [&](unsigned long p) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) return;
    unsigned multiplicity = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++multiplicity;
    }
    for (unsigned k = 0; k < multiplicity / 2; ++k) root *= p;
    if (multiplicity % 2 == 1) core *= p;
  };
  auto cubeExceeds = [&](unsigned long p) {
    Integer cube = Integer(p) * p * p;
    return cube > rest;
  };
  bool exhausted = false;
  for (unsigned long p : smallPrimes()) {
    if (p > trial_bound) break;
    if (cubeExceeds(p)) {
      exhausted = true;
      break;
    }
    tryPrimeSplit(p);
  }
  if (!exhausted && trial_bound > kDefaultTrialBound) {
    for (unsigned long d = kDefaultTrialBound + 1; d <= trial_bound; d += 2) {
      if (cubeExceeds(d)) break;
      tryPrimeSplit(d);
    }
  }
  // Whatever is left has no small prime factor; a perfect square is the only square
  // part we can still detect cheaply, and when all primes up to cbrt(rest) were tried
  // it is the only possible one.
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    Integer s = sqrt(rest);
    root *= s;
    rest = 1;
  }
  return {root, core * rest};
}

ExactNumber ExactNumber::fromSorted(Rational rational, std::vector<RadicalTerm> terms) {
  ExactNumber x;
  x.rational_ = std::move(rational);
  x.terms_ = std::move(terms);
  return x;
}

ExactNumber ExactNumber::normalize(const Rational& rational,
                                   std::span<const std::pair<Rational, Rational>> raw_terms,
                                   unsigned long trial_bound) {
  Rational r = rational;
  TermMap acc;
  for (const auto& [c, y] : raw_terms) {
    if (sgn(y) < 0) throw std::domain_error("negative radicand " + y.get_str());
    if (sgn(y) == 0 || sgn(c) == 0) continue;
    // sqrt(p/q) = sqrt(p*q)/q
    Integer n = y.get_num() * y.get_den();
    SquareSplit split = splitSquare(n, trial_bound);
    Rational coefficient = c * Rational(split.square_root) / Rational(y.get_den());
    accumulate(acc, r, split.core, coefficient);
  }
  return fromSorted(std::move(r), collect(acc));
}

ExactNumber ExactNumber::sqrt(const Rational& y) {
  return normalize(0, std::vector{std::pair{Rational(1), y}});
}

ExactNumber ExactNumber::parse(std::string_view text) { return Reader(text).parseExpression(); }

ExactNumber ExactNumber::withSigns(int rational_sign, std::span<const int> signs) const {
  if (signs.size() != terms_.size()) throw std::invalid_argument("one sign per radical term expected");
  std::vector<RadicalTerm> terms = terms_;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (signs[i] < 0) terms[i].coefficient = -terms[i].coefficient;
  }
  return fromSorted(rational_sign < 0 ? Rational(-rational_) : rational_, std::move(terms));
}

ExactNumber ExactNumber::operator-() const {
  std::vector<RadicalTerm> terms = terms_;
  for (RadicalTerm& t : terms) t.coefficient = -t.coefficient;
  return fromSorted(-rational_, std::move(terms));
}

ExactNumber operator+(const ExactNumber& a, const ExactNumber& b) {
  std::vector<RadicalTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->radicand < j->radicand)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->radicand < i->radicand) {
      out.push_back(*j++);
    } else {
      Rational c = i->coefficient + j->coefficient;
      if (sgn(c) != 0) out.push_back({c, i->radicand});
      ++i;
      ++j;
    }
  }
  return ExactNumber::fromSorted(a.rational_ + b.rational_, std::move(out));
}

ExactNumber operator-(const ExactNumber& a, const ExactNumber& b) { return a + (-b); }

ExactNumber operator*(const ExactNumber& a, const ExactNumber& b) {
  Rational rational = a.rational_ * b.rational_;
  TermMap acc;
  if (sgn(a.rational_) != 0) {
    for (const RadicalTerm& t : b.terms_) accumulate(acc, rational, t.radicand, a.rational_ * t.coefficient);
  }
  if (sgn(b.rational_) != 0) {
    for (const RadicalTerm& t : a.terms_) accumulate(acc, rational, t.radicand, b.rational_ * t.coefficient);
  }
  for (const RadicalTerm& s : a.terms_) {
    for (const RadicalTerm& t : b.terms_) {
      auto [g, r] = radicalProduct(s.radicand, t.radicand);
      accumulate(acc, rational, r, s.coefficient * t.coefficient * Rational(g));
    }
  }
  return ExactNumber::fromSorted(std::move(rational), collect(acc));
}

ExactNumber operator*(const ExactNumber& a, const Rational& q) {
  if (sgn(q) == 0) return {};
  std::vector<RadicalTerm> terms = a.terms_;
  for (RadicalTerm& t : terms) t.coefficient *= q;
  return ExactNumber::fromSorted(a.rational_ * q, std::move(terms));
}

ExactNumber operator/(const ExactNumber& a, const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("division of an exact number by zero");
  return a * Rational(1 / q);
}

std::strong_ordering operator<=>(const ExactNumber& a, const ExactNumber& b) { return cmp(a, b); }

std::string ExactNumber::str() const {
  std::string out;
  bool first = true;
  if (sgn(rational_) != 0 || terms_.empty()) {
    out = rational_.get_str();
    first = false;
  }
  for (const RadicalTerm& t : terms_) {
    bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational magnitude = abs(t.coefficient);
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "sqrt(" + t.radicand.get_str() + ")";
    first = false;
  }
  return out;
}

ExactNumber absConjugate(const ExactNumber& x) {
  std::vector<int> signs;
  for (const RadicalTerm& t : x.terms()) signs.push_back(sgn(t.coefficient));
  return x.withSigns(sgn(x.rationalPart()) < 0 ? -1 : 1, signs);
}

Rational conjugateNorm(const ExactNumber& x) {
  std::vector<Integer> radicands;
  for (const RadicalTerm& t : x.terms()) radicands.push_back(t.radicand);
  ExactNumber n = x;
  for (const Integer& atom : coprimeBase(radicands)) {
    bool involved = std::any_of(n.terms().begin(), n.terms().end(), [&](const RadicalTerm& t) {
      return mpz_divisible_p(t.radicand.get_mpz_t(), atom.get_mpz_t()) != 0;
    });
    if (involved) n = n * flipAtom(n, atom);
  }
  if (!n.isRational()) throw std::logic_error("conjugate norm did not reduce to a rational");
  return n.rationalPart();
}

RationalInterval enclose(const ExactNumber& x, unsigned bits) {
  RationalInterval iv{x.rationalPart(), x.rationalPart()};
  Integer scale = Integer(1) << bits;
  for (const RadicalTerm& t : x.terms()) {
    Integer shifted = t.radicand << (2 * bits);
    Integer s = sqrt(shifted);  // floor(sqrt(radicand) * 2^bits)
    Rational lo(s, scale);
    Rational hi(s + 1, scale);
    lo.canonicalize();
    hi.canonicalize();
    if (sgn(t.coefficient) > 0) {
      iv.lo += t.coefficient * lo;
      iv.hi += t.coefficient * hi;
    } else {
      iv.lo += t.coefficient * hi;
      iv.hi += t.coefficient * lo;
    }
  }
  return iv;
}

int signOf(const ExactNumber& x) {
  if (x.isRational()) return sgn(x.rationalPart());
  int positives = sgn(x.rationalPart()) > 0 ? 1 : 0;
  int negatives = sgn(x.rationalPart()) < 0 ? 1 : 0;
  for (const RadicalTerm& t : x.terms()) {
    (sgn(t.coefficient) > 0 ? positives : negatives) += 1;
  }
  if (negatives == 0) return 1;
  if (positives == 0) return -1;
  // x * ABS(x) = P^2 - N^2 has the sign of x since ABS(x) > 0.
  if (x.radicalCount() <= 3) {
    ExactNumber reduced = x * absConjugate(x);
    if (reduced.radicalCount() < x.radicalCount()) return signOf(reduced);
  }
  return signByRefinement(x);
}

std::strong_ordering cmp(const ExactNumber& a, const ExactNumber& b) {
  int s = signOf(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<ExactNumber> sqrtExact(const ExactNumber& x) {
  if (signOf(x) < 0) return std::nullopt;
  if (x.isRational()) return ExactNumber::sqrt(x.rationalPart());
  if (x.radicalCount() != 1) return std::nullopt;
  const Rational& a = x.rationalPart();
  const RadicalTerm& t = x.terms().front();
  Rational d2 = a * a - t.coefficient * t.coefficient * Rational(t.radicand);
  if (sgn(d2) < 0 || sgn(a) < 0) return std::nullopt;
  if (mpz_perfect_square_p(d2.get_num_mpz_t()) == 0 || mpz_perfect_square_p(d2.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Rational d(Integer(sqrt(d2.get_num())), Integer(sqrt(d2.get_den())));
  d.canonicalize();
  ExactNumber result = ExactNumber::sqrt((a + d) / 2);
  ExactNumber other = ExactNumber::sqrt((a - d) / 2);
  result = sgn(t.coefficient) > 0 ? result + other : result - other;
  if (result * result != x) return std::nullopt;
  return result;
}

}  // namespace qeuclid
