#include "decaykit/slope/rational.hpp"
#include "decaykit/slope/slope.hpp"
#include "decaykit/slope/zz_order.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace decaykit;

namespace {

// Lexicographic sign computed directly from the functionals.
int direct_sign(const ZZOrder& o, Int m, Int n) {
  const Int first = o.f1().a * m + o.f1().b * n;
  if (first != 0) return first > 0 ? 1 : -1;
  const Int second = o.f2().a * m + o.f2().b * n;
  return second > 0 ? 1 : (second < 0 ? -1 : 0);
}

ZZOrder random_order(std::mt19937_64& rng, int range = 6) {
  std::uniform_int_distribution<Int> c(-range, range);
  for (;;) {
    Functional f1{c(rng), c(rng)}, f2{c(rng), c(rng)};
    if (f1.a * f2.b - f1.b * f2.a != 0) return ZZOrder(f1, f2);
  }
}

Slope random_slope(std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> m(-30, 30), n(1, 12);
  return Slope::from_pair(m(rng), n(rng));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational::parse("22").to_string() == "22");
  CHECK(Rational::parse("-9/6") == Rational(-3, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(7, 2) < Rational(5));
  CHECK(Rational(11, 2) > Rational(5));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
}

TEST_CASE("rational division by zero and overflow are reported") {
  CHECK_THROWS(Rational(1) / Rational(0));
  const Rational big(Int{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("gcd and floor helpers") {
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-6, 9) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_mod(-7, 3) == 2);
}

TEST_CASE("reduce_slope splits primitive part and weight") {
  const Slope a = reduce_slope(10, 4);
  CHECK(a.m() == 5);
  CHECK(a.n() == 2);
  CHECK(a.weight() == 2);
  const Slope b = reduce_slope(5, 1);
  CHECK(b.m() == 5);
  CHECK(b.weight() == 1);
  const Slope c = reduce_slope(-6, 9);
  CHECK(c.m() == -2);
  CHECK(c.n() == 3);
  CHECK(c.weight() == 3);
  CHECK_THROWS_AS(reduce_slope(0, 0), std::invalid_argument);
  CHECK(Slope::from_pair(3, -2) == Slope::from_pair(-3, 2));
  CHECK(Slope::from_pair(1, 0).value().is_infinite());
}

TEST_CASE("cramer decomposition of the worked triple") {
  const auto c = cramer_decompose(Slope::from_pair(1, 3), Slope::from_pair(1, 1), Slope::from_pair(1, 2));
  CHECK(c == CramerCoefficients{1, 1, 2});
  CHECK_THROWS_AS(cramer_decompose(Slope::from_pair(1, 1), Slope::from_pair(1, 3), Slope::from_pair(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("cramer decomposition property: positive coefficients and exact lattice identity") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 500) {
    std::vector<Slope> s{random_slope(rng), random_slope(rng), random_slope(rng)};
    std::sort(s.begin(), s.end(), [](const Slope& a, const Slope& b) { return a.value() < b.value(); });
    if (s[0].value() == s[1].value() || s[1].value() == s[2].value()) continue;
    const auto c = cramer_decompose(s[0], s[2], s[1]);
    REQUIRE(c.a > 0);
    REQUIRE(c.b > 0);
    REQUIRE(c.c > 0);
    CHECK(c.a * s[0].m() + c.b * s[2].m() == c.c * s[1].m());
    CHECK(c.a * s[0].n() + c.b * s[2].n() == c.c * s[1].n());
    ++checked;
  }
}

TEST_CASE("slope set membership is inclusive and excludes the meridian") {
  CHECK(in_slope_set(Slope::from_pair(5, 1), Rational(5)));
  CHECK(in_slope_set(Slope::from_pair(11, 2), Rational(5)));
  CHECK_FALSE(in_slope_set(Slope::from_pair(9, 2), Rational(5)));
  CHECK_FALSE(in_slope_set(Slope::from_pair(1, 0), Rational(5)));
}

TEST_CASE("order signs agree with the functionals, reversal negates, weight is irrelevant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const ZZOrder o = random_order(rng);
    const ZZOrder r = reverse_order(o);
    const Slope s = random_slope(rng);
    CHECK(slope_sign(o, s) == direct_sign(o, s.m(), s.n()));
    CHECK(slope_sign(r, s) == -slope_sign(o, s));
    CHECK(slope_sign(o, s.with_weight(3)) == slope_sign(o, s));
  }
  CHECK_THROWS_AS(ZZOrder({1, 2}, {2, 4}), std::invalid_argument);
}

TEST_CASE("boundary slope is the kernel line of the first functional") {
  CHECK(boundary_slope(ZZOrder({1, -5}, {0, 1})) == ExtendedRational(Rational(5)));
  CHECK(boundary_slope(ZZOrder({0, 1}, {1, 0})).is_infinite());
}

TEST_CASE("decayed window check matches lattice enumeration") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> num(-20, 20), den(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const ZZOrder o = random_order(rng);
    const Rational r(num(rng), den(rng));
    bool pos = false, neg = false;
    for (Int n = 1; n <= 60; ++n) {
      const Int start = floor_div(r.numerator() * n + r.denominator() - 1, r.denominator());
      for (Int m = start; m <= start + 200; ++m) {
        (direct_sign(o, m, n) > 0 ? pos : neg) = true;
      }
    }
    const WindowSign w = decayed_window_check(o, r);
    CAPTURE(o.to_string());
    CAPTURE(r.to_string());
    if (w == WindowSign::AllPositive) CHECK((pos && !neg));
    if (w == WindowSign::AllNegative) CHECK((neg && !pos));
    if (w == WindowSign::Mixed) CHECK((pos && neg));
  }
}

TEST_CASE("positivity implication over a reversal-closed family is symmetric") {
  std::mt19937_64 rng(23);
  int implications = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<ZZOrder> family;
    for (int i = 0; i < 3; ++i) {
      family.push_back(random_order(rng, 3));
      family.push_back(reverse_order(family.back()));
    }
    const Slope g = random_slope(rng), h = random_slope(rng);
    bool direct = true;
    for (const auto& o : family) {
      if (slope_sign(o, g) > 0 && slope_sign(o, h) < 0) direct = false;
    }
    CHECK(positivity_implies(family, g, h) == direct);
    if (positivity_implies(family, g, h)) {
      ++implications;
      CHECK(positivity_implies(family, h, g));
    }
  }
  CHECK(implications > 0);
}
