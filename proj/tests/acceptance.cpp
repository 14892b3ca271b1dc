// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every check is exact; the runtime limits are part of the criteria.

#include "decaykit/cable/cable.hpp"
#include "decaykit/cable/knot_id.hpp"
#include "decaykit/cable/registry.hpp"
#include "decaykit/certificate/builtin.hpp"
#include "decaykit/certificate/kernel.hpp"
#include "decaykit/search/cone_search.hpp"
#include "decaykit/search/presentation_file.hpp"
#include "decaykit/slope/slope.hpp"
#include "decaykit/slope/zz_order.hpp"
#include "decaykit/words/backend_spec.hpp"
#include "decaykit/words/backends.hpp"
#include "decaykit/words/word_syntax.hpp"

#include "support/mutations.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace decaykit;

namespace {

const std::string kData = DECAYKIT_DATA_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_ms;
  std::function<Outcome()> body;
};

Slope random_slope(std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> m(-40, 40), n(1, 15);
  return Slope::from_pair(m(rng), n(rng));
}

ZZOrder random_order(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<Int> c(-range, range);
  for (;;) {
    Functional f1{c(rng), c(rng)}, f2{c(rng), c(rng)};
    if (f1.a * f2.b - f1.b * f2.a != 0) return ZZOrder(f1, f2);
  }
}

Outcome cramer() {
  Outcome out;
  const auto worked = cramer_decompose(Slope::from_pair(1, 3), Slope::from_pair(1, 1), Slope::from_pair(1, 2));
  out.require(worked == CramerCoefficients{1, 1, 2}, "worked instance (1/3, 1/1; 1/2) is not (1, 1, 2)");
  std::mt19937_64 rng(101);
  int done = 0;
  while (done < 1000) {
    std::vector<Slope> s{random_slope(rng), random_slope(rng), random_slope(rng)};
    std::sort(s.begin(), s.end(), [](const Slope& a, const Slope& b) { return a.value() < b.value(); });
    if (s[0].value() == s[1].value() || s[1].value() == s[2].value()) continue;
    const auto c = cramer_decompose(s[0], s[2], s[1]);
    out.require(c.a > 0 && c.b > 0 && c.c > 0, "non-positive coefficient");
    out.require(c.a * s[0].m() + c.b * s[2].m() == c.c * s[1].m() &&
                    c.a * s[0].n() + c.b * s[2].n() == c.c * s[1].n(),
                "lattice identity fails");
    ++done;
  }
  return out;
}

Outcome crucial_identity() {
  Outcome out;
  int pairs = 0;
  for (Int a = 2; a <= 12; ++a) {
    for (Int b = a + 1; b <= 12; ++b) {
      if (oracle::brute_gcd(a, b) != 1) continue;
      for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
        const auto c = euclid_uv(p, q);
        const Word w = Word::generator("t", -c.v).power(p) * Word{{"m", c.u}, {"l", c.v}}.power(p);
        out.require(normal_form_Gpq(w, p, q) == normal_form_Gpq(Word::generator("m"), p, q),
                    "identity fails for (" + std::to_string(p) + ", " + std::to_string(q) + ")");
        ++pairs;
      }
    }
  }
  out.detail = out.ok ? std::to_string(pairs) + " ordered pairs" : out.detail;
  return out;
}

Outcome builtin_certificates() {
  Outcome out;
  const std::vector<std::tuple<Int, Int, Rational>> cases{
      {2, 3, Rational(1)}, {2, 5, Rational(1)}, {3, 4, Rational(1)}, {3, 5, Rational(1)}, {2, 11, Rational(5)}};
  for (const auto& [p, q, r] : cases) {
    const std::string tag = "(" + std::to_string(p) + ", " + std::to_string(q) + ", " + r.to_string() + ")";
    const auto cert = certificate_from_json(to_json(builtin_cable_certificate(p, q, r)));
    const auto rep = verify_derivation(cert, 5);
    out.require(rep.verdict() == "ACCEPT", tag + " rejected");
    out.require(rep.grid_limited && rep.grid_bound == 5, tag + " not tagged grid-limited at bound 5");
    if (!rep.accepted) continue;
    const auto c = conclude_decay(rep);
    out.require(c.decay == Rational(p * q), tag + " conclusion is not pq");
    out.require(c.statement.find(std::to_string(p * q) + "-decayed") != std::string::npos,
                tag + " statement lacks the pq-decayed conclusion");
  }
  const auto c = conclude_decay(verify_derivation(builtin_cable_certificate(2, 11, Rational(5)), 5));
  out.require(c.decay == Rational(22), "(2, 11) cable of the trefoil is not 22-decayed");
  out.require(*decayed_registry_lookup(KnotId::torus(2, 3)) == Rational(5), "trefoil bound is not 5");
  if (out.ok) out.detail = "grid-limited, bound 5";
  return out;
}

Outcome mutations() {
  Outcome out;
  std::mt19937_64 rng(202);
  const auto base = builtin_cable_certificate(2, 11, Rational(5));
  out.require(verify_derivation(base, 5).accepted, "base certificate not accepted");
  for (int i = 0; i < 50; ++i) {
    const auto m = mutation::mutate(base, rng);
    out.require(verify_derivation(m.cert, 5).verdict() == "REJECT", "accepted mutant: " + m.description);
  }
  if (out.ok) out.detail = "50/50 rejected";
  return out;
}

Outcome registry_numbers() {
  Outcome out;
  const auto reg = Registry::load(kData + "/registry.json");
  const std::vector<std::pair<std::string, Int>> expected{
      {"torus:2,3", 5},         {"torus:3,4", 11},        {"torus:2,5", 9},
      {"pretzel:-2,3,5", 15},   {"pretzel:-2,3,7", 17},   {"twisted-torus:3,5", 17}};
  for (const auto& [id, bound] : expected) {
    const auto k = KnotId::parse(id);
    out.require(reg.contains(k), id + " not listed");
    const auto got = reg.lookup(k);
    out.require(got && *got == Rational(bound), id + " bound is not " + std::to_string(bound));
  }
  return out;
}

Outcome lo_window_numbers() {
  Outcome out;
  const auto five = decayed_registry_lookup(KnotId::torus(2, 3));
  out.require(five && *five == Rational(5), "companion bound missing");
  // Slopes sampled on a grid of step 1/4 across [-10, 40].
  for (Int num = -40; num <= 160; ++num) {
    const Rational r(num, 4);
    const auto v = lo_window(2, 11, five, r);
    const auto want = r < Rational(9) ? LoVerdict::LeftOrderable
                      : r < Rational(22) ? LoVerdict::Unknown
                                         : LoVerdict::NotLeftOrderable;
    out.require(v == want, "wrong verdict at r = " + r.to_string());
  }
  const Int g = torus_knot_genus(2, 3);
  out.require(g == 1, "g(T_{2,3}) != 1");
  out.require(2 * g - 1 == 1, "2g - 1 != 1");
  out.require(torus_knot_genus(2, 11) == 5, "g(T_{2,11}) != 5");
  return out;
}

Outcome satellite_quotient_checks() {
  Outcome out;
  std::mt19937_64 rng(303);
  int pairs = 0;
  for (Int p = 2; p <= 8; ++p) {
    for (Int q = 1; q <= 8; ++q) {
      if (oracle::brute_gcd(p, q) != 1) continue;
      const std::string tag = "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
      const auto params = euclid_uv(p, q);
      const auto target = satellite_target_backend(p, q);
      const auto per = cable_peripherals(params);
      out.require(target->is_identity(satellite_quotient(Word::generator("l"), params)) == Equality::Equal,
                  tag + " longitude of the companion is not killed");
      // H_1 of <m, t | t^p = m^q> is Z via m -> p, t -> q.
      auto h1 = [&](const Word& w) {
        const auto letters = oracle::letters_of(w);
        return p * oracle::exponent_sum(letters, "m") + q * oracle::exponent_sum(letters, "t");
      };
      out.require(h1(satellite_quotient(per.meridian, params)) == 1, tag + " cable meridian image is not 1");
      out.require(h1(satellite_quotient(per.longitude, params)) == 0, tag + " cable longitude image is not 0");
      for (int i = 0; i < 500; ++i) {
        const Word a = oracle::random_word(rng, {"m", "l", "t"}, 6), b = oracle::random_word(rng, {"m", "l", "t"}, 6);
        out.require(target->equal(satellite_quotient(a * b, params),
                                  satellite_quotient(a, params) * satellite_quotient(b, params)) == Equality::Equal,
                    tag + " not multiplicative");
      }
      ++pairs;
    }
  }
  if (out.ok) out.detail = std::to_string(pairs) + " coprime pairs x 500 word pairs";
  return out;
}

Outcome order_search() {
  Outcome out;
  auto contradiction_within = [&](const Presentation& pres, const WordProblem& backend, const std::string& tag) {
    for (int radius = 1; radius <= 3; ++radius) {
      const auto inst = enumerate_ball(pres, radius, backend);
      const auto res = cone_search(inst);
      if (res.outcome == SearchOutcome::Contradiction) {
        out.require(check_refutation(inst, res.refutation, backend).empty(), tag + " refutation does not replay");
        return;
      }
    }
    out.require(false, tag + " has no contradiction at radius <= 3");
  };
  for (Int n = 2; n <= 6; ++n) {
    const Presentation zn({"a"}, {Word::generator("a", n)});
    contradiction_within(zn, *detect_backend(zn).backend, "<a | a^" + std::to_string(n) + ">");
  }
  const auto mod = load_presentation_file(kData + "/presentations/z2_free_z3.json");
  contradiction_within(mod.presentation, *mod.backend.backend, "<a, b | a^2, b^3>");

  for (const char* file : {"z2.json", "klein.json"}) {
    const auto pf = load_presentation_file(kData + "/presentations/" + file);
    const auto inst = enumerate_ball(pf.presentation, 4, *pf.backend.backend);
    const auto res = cone_search(inst);
    out.require(res.outcome == SearchOutcome::Assignment, std::string(file) + " has no assignment at radius 4");
    if (res.outcome != SearchOutcome::Assignment) continue;
    out.require(check_assignment(inst, res.signs).empty(), std::string(file) + " assignment does not verify");
    std::vector<bool> reversed(res.signs.size());
    std::transform(res.signs.begin(), res.signs.end(), reversed.begin(), [](bool s) { return !s; });
    out.require(check_assignment(inst, reversed).empty(), std::string(file) + " reversed assignment fails");
  }
  return out;
}

Outcome zz_order_properties() {
  Outcome out;
  std::mt19937_64 rng(404);
  // Same sign on every slope above the boundary, including the meridian.
  int cases = 0;
  while (cases < 1000) {
    const ZZOrder o = random_order(rng, 7);
    const auto boundary = boundary_slope(o);
    if (boundary.is_infinite()) continue;
    const int above = slope_sign(o, Slope::from_pair(1, 0));
    std::uniform_int_distribution<Int> lift(1, 60), den(1, 9);
    const Rational b = boundary.value();
    for (int k = 0; k < 5; ++k) {
      const Int n = den(rng);
      const Int m = floor_div(b.numerator() * n, b.denominator()) + lift(rng);
      const Slope s = Slope::from_pair(m, n);
      if (!(s.value() > boundary)) continue;
      out.require(slope_sign(o, s) == above, "sign changes above the boundary of " + o.to_string());
    }
    const Rational r = b + Rational(lift(rng), den(rng));
    const auto w = decayed_window_check(o, r);
    out.require(w == (above > 0 ? WindowSign::AllPositive : WindowSign::AllNegative),
                "window above the boundary is not sign-constant for " + o.to_string());
    ++cases;
  }
  // Positivity implication is symmetric over reversal-closed families.
  for (int i = 0; i < 1000; ++i) {
    std::vector<ZZOrder> family;
    for (int j = 0; j < 3; ++j) {
      family.push_back(random_order(rng, 3));
      family.push_back(reverse_order(family.back()));
    }
    const Slope g = random_slope(rng), h = random_slope(rng);
    bool direct = true;
    for (const auto& o : family) {
      if (o.sign(g.m(), g.n()) > 0 && o.sign(h.m(), h.n()) < 0) direct = false;
    }
    out.require(positivity_implies(family, g, h) == direct, "implication differs from its definition");
    out.require(positivity_implies(family, g, h) == positivity_implies(family, h, g),
                "implication is not symmetric under reversal closure");
  }
  // Weight invariance.
  for (int i = 0; i < 1000; ++i) {
    const ZZOrder o = random_order(rng, 7);
    const Slope s = random_slope(rng);
    const Int w = std::uniform_int_distribution<Int>(2, 9)(rng);
    out.require(slope_sign(o, s.with_weight(w)) == slope_sign(o, s), "weight changes the sign");
    out.require(o.sign(w * s.m(), w * s.n()) == o.sign(s.m(), s.n()), "order sign not scale invariant");
  }
  if (out.ok) out.detail = "1000 cases per property";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cramer decomposition", 1000, cramer},
      {2, "crucial identity in G_{p,q}", 5000, crucial_identity},
      {3, "builtin cable certificates", 60000, builtin_certificates},
      {4, "mutation soundness", 120000, mutations},
      {5, "registry decay numbers", 1000, registry_numbers},
      {6, "left-orderability window and genus", 1000, lo_window_numbers},
      {7, "satellite quotient", 10000, satellite_quotient_checks},
      {8, "order-search oracle", 30000, order_search},
      {9, "Z^2 order properties", 5000, zz_order_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < c.limit_ms;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::string detail = o.detail;
    if (o.ok && !in_time) detail = "too slow";
    std::printf("%s criterion %d: %s [%.1f ms, limit %.0f ms]%s%s\n", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), ms, c.limit_ms, detail.empty() ? "" : " - ", detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
