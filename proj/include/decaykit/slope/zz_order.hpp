#pragma once

#include "decaykit/slope/rational.hpp"
#include "decaykit/slope/slope.hpp"

#include <span>
#include <string>

namespace decaykit {

struct Functional {
  Int a;  // coefficient of the mu exponent
  Int b;  // coefficient of the lambda exponent
  Int operator()(Int m, Int n) const { return a * m + b * n; }
  friend bool operator==(const Functional&, const Functional&) = default;
};

/// A left-order on Z^2 given by two independent integer functionals compared
/// lexicographically: the sign of (m, n) is sign(f1(m, n)), falling back to
/// sign(f2(m, n)) on the kernel line of f1.
///
/// Only orders whose kernel line is rational are representable.
class ZZOrder {
 public:
  /// Throws std::invalid_argument when f1 and f2 are dependent.
  ZZOrder(Functional f1, Functional f2);

  const Functional& f1() const { return f1_; }
  const Functional& f2() const { return f2_; }

  /// +1 or -1 for every nonzero lattice point; 0 only at the origin.
  int sign(Int m, Int n) const;

  friend bool operator==(const ZZOrder&, const ZZOrder&) = default;
  std::string to_string() const;

 private:
  Functional f1_;
  Functional f2_;
};

/// Sign of the group element a slope represents; independent of its weight.
int slope_sign(const ZZOrder& order, const Slope& s);

/// The reversed order (positive cone P^-1).
ZZOrder reverse_order(const ZZOrder& order);

/// Slope m/n of the kernel line of f1.
ExtendedRational boundary_slope(const ZZOrder& order);

enum class WindowSign { AllPositive, AllNegative, Mixed };

std::string to_string(WindowSign w);

/// Exact classification of the signs of all slopes with value >= r.
///
/// The set is the lattice part of the cone {n >= 1, m >= r n}. Its closure is
/// spanned by the ray through (r, 1) and the meridian ray (1, 0); f1 is
/// linear, so it is sign-constant on the open cone unless it takes opposite
/// signs on the two rays. The ray through r itself is evaluated with the full
/// lexicographic sign since it may lie on the kernel of f1.
WindowSign decayed_window_check(const ZZOrder& order, const Rational& r);

/// True when sign(g) = +1 implies sign(h) = +1 for every order in `family`.
bool positivity_implies(std::span<const ZZOrder> family, const Slope& g, const Slope& h);

}  // namespace decaykit
