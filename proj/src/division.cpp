#include "qeuclid/division.hpp"

#include <optional>
#include <stdexcept>

namespace qeuclid {

Rounding roundHalf(const Rational& a0) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), a0.get_num_mpz_t(), a0.get_den_mpz_t());
  Rational frac = a0 - Rational(fl);  // in [0, 1)
  const Rational half(1, 2);
  Integer x;
  if (frac < half) {
    x = fl;
  } else if (frac > half) {
    x = fl + 1;
  } else {
    x = mpz_even_p(fl.get_mpz_t()) != 0 ? fl : Integer(fl + 1);
  }
  Rational diff = a0 - Rational(x);
  return {x, sgn(diff) < 0 ? -1 : 1, abs(diff)};
}

DivisionResult divide(const FieldData& F, const FieldElement& xi, DivisionOptions options) {
  Rounding ra = roundHalf(xi.a);
  Rounding rb = roundHalf(xi.b);
  ShiftedNormEvaluator eval(F, ra.a, rb.a);
  std::optional<std::size_t> chosen;
  Rational best;
  for (std::size_t i = 0; i < F.coveringPairs.size(); ++i) {
    Rational value = eval.forPair(i);
    if (abs(value) > F.M1) continue;
    if (!chosen || abs(value) < abs(best)) {
      chosen = i;
      best = value;
    }
    if (!options.allPairs) break;
  }
  if (!chosen) throw std::logic_error("certificate incomplete: no covering pair for " + toString(xi));
  const Shift& s = F.coveringPairs[*chosen];
  // xi - gamma = s_a (a + u) + s_b (b + v) w, whose norm is f(a+u, b+v).
  RingElement gamma{ra.x - ra.s * static_cast<long>(s.u), rb.x - rb.s * static_cast<long>(s.v)};
  return {gamma, best, s, ra.s, rb.s};
}

GcdResult gcdWithSteps(const FieldData& F, const RingElement& alpha, const RingElement& beta) {
  if (alpha.isZero() && beta.isZero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  RingElement a = alpha;
  RingElement b = beta;
  std::size_t steps = 0;
  while (!b.isZero()) {
    FieldElement xi = divideToField(F.m, a, b);
    RingElement gamma = divide(F, xi).quotient;
    RingElement r = sub(a, mul(F.m, gamma, b));
    a = b;
    b = r;
    ++steps;
  }
  if (sgn(a.x) < 0 || (sgn(a.x) == 0 && sgn(a.y) < 0)) a = {-a.x, -a.y};
  return {a, steps};
}

}  // namespace qeuclid
