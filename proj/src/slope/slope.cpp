#include "decaykit/slope/slope.hpp"

#include <stdexcept>

namespace decaykit {

Slope Slope::from_pair(Int m, Int n) {
  if (m == 0 && n == 0) throw std::invalid_argument("slope (0, 0) is not a peripheral class");
  if (n < 0) {
    m = -m;
    n = -n;
  }
  Int g = gcd(m, n);
  return Slope(m / g, n / g, g);
}

Slope Slope::from_rational(const Rational& r, Int weight) {
  if (weight < 1) throw std::invalid_argument("slope weight must be positive");
  return Slope(r.numerator(), r.denominator(), weight);
}

ExtendedRational Slope::value() const {
  if (n_ == 0) return ExtendedRational::infinity();
  return Rational(m_, n_);
}

Slope Slope::with_weight(Int weight) const {
  if (weight < 1) throw std::invalid_argument("slope weight must be positive");
  return Slope(m_, n_, weight);
}

std::string Slope::to_string() const {
  std::string out = "m^" + std::to_string(total_m()) + " l^" + std::to_string(total_n());
  return out;
}

Slope reduce_slope(Int m, Int n) { return Slope::from_pair(m, n); }

CramerCoefficients cramer_decompose(const Slope& r1, const Slope& r2, const Slope& target) {
  if (r1.n() < 1 || r2.n() < 1 || target.n() < 1) {
    throw std::invalid_argument("cramer_decompose needs finite slopes (n >= 1)");
  }
  if (!(r1.value() < target.value()) || !(target.value() < r2.value())) {
    throw std::invalid_argument("cramer_decompose needs value(r1) < value(target) < value(r2)");
  }
  const Int p1 = r1.m(), q1 = r1.n();
  const Int p2 = r2.m(), q2 = r2.n();
  const Int m = target.m(), n = target.n();
  CramerCoefficients out{n * p2 - q2 * m, q1 * m - n * p1, q1 * p2 - q2 * p1};
  // Positivity is equivalent to the strict ordering; a failure here is a bug.
  if (out.a <= 0 || out.b <= 0 || out.c <= 0) {
    throw std::logic_error("cramer determinants not positive");
  }
  return out;
}

bool in_slope_set(const Slope& s, const Rational& r) {
  if (s.is_meridian()) return false;
  return s.value().value() >= r;
}

}  // namespace decaykit
