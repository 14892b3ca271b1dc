#include "decaykit/slope/zz_order.hpp"

#include <stdexcept>

namespace decaykit {

namespace {

int sgn(WideInt x) { return (x > 0) - (x < 0); }

}  // namespace

ZZOrder::ZZOrder(Functional f1, Functional f2) : f1_(f1), f2_(f2) {
  if (WideInt(f1.a) * f2.b - WideInt(f1.b) * f2.a == 0) {
    throw std::invalid_argument("ZZOrder functionals must be independent");
  }
}

int ZZOrder::sign(Int m, Int n) const {
  int s = sgn(WideInt(f1_.a) * m + WideInt(f1_.b) * n);
  if (s != 0) return s;
  return sgn(WideInt(f2_.a) * m + WideInt(f2_.b) * n);
}

std::string ZZOrder::to_string() const {
  return "f1=(" + std::to_string(f1_.a) + "," + std::to_string(f1_.b) + ") f2=(" +
         std::to_string(f2_.a) + "," + std::to_string(f2_.b) + ")";
}

int slope_sign(const ZZOrder& order, const Slope& s) { return order.sign(s.m(), s.n()); }

ZZOrder reverse_order(const ZZOrder& order) {
  return ZZOrder({-order.f1().a, -order.f1().b}, {-order.f2().a, -order.f2().b});
}

ExtendedRational boundary_slope(const ZZOrder& order) {
  // a*m + b*n = 0  =>  m/n = -b/a
  if (order.f1().a == 0) return ExtendedRational::infinity();
  return Rational(-order.f1().b, order.f1().a);
}

std::string to_string(WindowSign w) {
  switch (w) {
    case WindowSign::AllPositive: return "ALL_POSITIVE";
    case WindowSign::AllNegative: return "ALL_NEGATIVE";
    case WindowSign::Mixed: return "MIXED";
  }
  return "?";
}

WindowSign decayed_window_check(const ZZOrder& order, const Rational& r) {
  const Int P = r.numerator();
  const Int Q = r.denominator();
  const int at_r = order.sign(P, Q);
  const int f1_at_r = sgn(WideInt(order.f1().a) * P + WideInt(order.f1().b) * Q);
  const int f1_at_inf = sgn(order.f1().a);

  // Sign of f1 on the open part of the cone (m/n > r).
  int interior;
  if (f1_at_r == 0) {
    interior = f1_at_inf;
  } else if (f1_at_inf == 0 || f1_at_inf == f1_at_r) {
    interior = f1_at_r;
  } else {
    return WindowSign::Mixed;
  }
  if (interior != at_r) return WindowSign::Mixed;
  return at_r > 0 ? WindowSign::AllPositive : WindowSign::AllNegative;
}

bool positivity_implies(std::span<const ZZOrder> family, const Slope& g, const Slope& h) {
  for (const auto& order : family) {
    if (slope_sign(order, g) > 0 && slope_sign(order, h) <= 0) return false;
  }
  return true;
}

}  // namespace decaykit
