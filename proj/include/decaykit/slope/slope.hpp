#pragma once

#include "decaykit/slope/rational.hpp"

#include <string>

namespace decaykit {

/// A peripheral class mu^(m*w) lambda^(n*w) stored as its primitive
/// direction (m, n) with n >= 0 and a positive weight w.
///
/// Unreduced pairs such as (10, 4) are kept exactly: the primitive part is
/// (5, 2) and the weight 2 records the power. The value m/n is what the
/// surgery coefficient refers to; n == 0 only for the meridian direction.
class Slope {
 public:
  /// Throws std::invalid_argument for (0, 0). Negative n flips both signs.
  static Slope from_pair(Int m, Int n);
  static Slope from_rational(const Rational& r, Int weight = 1);

  Int m() const { return m_; }
  Int n() const { return n_; }
  Int weight() const { return weight_; }

  /// Exponents of the represented group element.
  Int total_m() const { return m_ * weight_; }
  Int total_n() const { return n_ * weight_; }

  ExtendedRational value() const;
  bool is_meridian() const { return n_ == 0; }

  Slope with_weight(Int weight) const;

  friend bool operator==(const Slope&, const Slope&) = default;
  std::string to_string() const;

 private:
  Slope(Int m, Int n, Int w) : m_(m), n_(n), weight_(w) {}
  Int m_;
  Int n_;
  Int weight_;
};

/// Normalizes (m, n) into primitive part and weight (rejects (0, 0)).
Slope reduce_slope(Int m, Int n);

struct CramerCoefficients {
  Int a;
  Int b;
  Int c;
  friend bool operator==(const CramerCoefficients&, const CramerCoefficients&) = default;
};

/// Positive a, b, c with (mu^p1 lambda^q1)^a (mu^p2 lambda^q2)^b = (mu^m lambda^n)^c,
/// computed from the primitive parts of the three slopes as
///   a = n*p2 - q2*m,   b = q1*m - n*p1,   c = q1*p2 - q2*p1.
/// Requires n >= 1 on all three and value(r1) < value(target) < value(r2);
/// throws std::invalid_argument otherwise.
CramerCoefficients cramer_decompose(const Slope& r1, const Slope& r2, const Slope& target);

/// S_r membership: finite slope with value >= r (the meridian never belongs).
bool in_slope_set(const Slope& s, const Rational& r);

}  // namespace decaykit
