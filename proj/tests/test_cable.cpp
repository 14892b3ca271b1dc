#include "decaykit/cable/cable.hpp"
#include "decaykit/cable/knot_id.hpp"
#include "decaykit/cable/registry.hpp"
#include "decaykit/words/abelian.hpp"
#include "decaykit/words/word_syntax.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace decaykit;

namespace {

const std::string kData = DECAYKIT_TEST_DATA_DIR;

std::vector<std::pair<Int, Int>> coprime_pairs(Int max) {
  std::vector<std::pair<Int, Int>> out;
  for (Int p = 2; p <= max; ++p) {
    for (Int q = 1; q <= max; ++q) {
      if (oracle::brute_gcd(p, q) == 1) out.push_back({p, q});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("euclid data matches the brute-force minimal solution") {
  for (auto [p, q] : coprime_pairs(25)) {
    const auto c = euclid_uv(p, q);
    const auto [u, v] = oracle::brute_uv(p, q);
    CHECK(c.u == u);
    CHECK(c.v == v);
    CHECK(p * c.u - q * c.v == 1);
  }
  CHECK(euclid_uv(2, 11) == CableParams{2, 11, 6, 1});
  CHECK_THROWS_AS(euclid_uv(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(euclid_uv(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(euclid_uv(3, 0), std::invalid_argument);
}

TEST_CASE("cable peripheral words") {
  const auto c = euclid_uv(2, 3);
  const auto per = cable_peripherals(c);
  CHECK(per.meridian.to_string() == "m^2 l t^-1");
  CHECK(format_parametric_word(cable_longitude_compact(c)) == "(m^2 l t^-1)^-6 t^2");
  CHECK(instantiate(cable_longitude_compact(c), {}) == per.longitude);

  for (auto [p, q] : coprime_pairs(9)) {
    const auto params = euclid_uv(p, q);
    const auto pw = cable_peripherals(params);
    const auto mer = oracle::letters_of(pw.meridian), lon = oracle::letters_of(pw.longitude);
    CHECK(oracle::gpq_homology(mer, p, q).first == 1);
    CHECK(oracle::gpq_homology(lon, p, q).first == 0);
    CHECK(cable_homology(pw.meridian, params) == 1);
    CHECK(cable_homology(pw.longitude, params) == 0);
    const auto g = make_gpq_backend(p, q);
    CHECK(g->equal(pw.meridian * pw.longitude, pw.longitude * pw.meridian) == Equality::Equal);
  }
}

TEST_CASE("cable homology agrees with the exponent-sum oracle") {
  std::mt19937_64 rng(8);
  for (auto [p, q] : coprime_pairs(7)) {
    const auto params = euclid_uv(p, q);
    for (int i = 0; i < 20; ++i) {
      const Word w = oracle::random_word(rng, {"m", "l", "t"}, 6);
      CHECK(cable_homology(w, params) == oracle::gpq_homology(oracle::letters_of(w), p, q).first);
    }
  }
  CHECK_THROWS_AS(cable_homology(parse_word("x"), euclid_uv(2, 3)), std::invalid_argument);
}

TEST_CASE("torus knot meridians generate homology") {
  CHECK(torus_meridian_exponents(2, 3) == std::pair<Int, Int>{1, -1});
  CHECK(torus_meridian_exponents(3, 5) == std::pair<Int, Int>{-1, 2});
  for (Int p = 2; p <= 9; ++p) {
    for (Int q = 2; q <= 9; ++q) {
      if (oracle::brute_gcd(p, q) != 1) continue;
      const auto pres = torus_knot_presentation(p, q);
      const Abelianization h(pres);
      REQUIRE(h.free_rank() == 1);
      const auto mer = h.image(pres.peripheral()->meridian).free[0];
      CHECK((mer == 1 || mer == -1));
      CHECK(h.image(pres.peripheral()->longitude).is_zero());
      const auto [a, b] = torus_meridian_exponents(p, q);
      CHECK(a * q + b * p == 1);
      CHECK(2 * (a < 0 ? -a : a) <= p);
      const auto amalgam = make_cyclic_amalgam_backend("x", p, "y", q);
      CHECK(amalgam->equal(pres.peripheral()->meridian * pres.peripheral()->longitude,
                           pres.peripheral()->longitude * pres.peripheral()->meridian) == Equality::Equal);
    }
  }
  CHECK_THROWS_AS(torus_knot_presentation(2, 4), std::invalid_argument);
}

TEST_CASE("cable group over the trefoil") {
  const auto companion = torus_knot_presentation(2, 3);
  const auto params = euclid_uv(2, 11);
  const auto g = cable_group(companion, params);
  CHECK(g.generators() == std::vector<std::string>{"x", "y", "t"});
  CHECK(g.relators().size() == 2);
  const Abelianization h(g);
  CHECK(h.free_rank() == 1);
  CHECK(h.torsion_orders().empty());
  const auto mer = h.image(g.peripheral()->meridian).free[0];
  CHECK((mer == 1 || mer == -1));
  CHECK(h.image(g.peripheral()->longitude).is_zero());
  CHECK_THROWS_AS(cable_group(Presentation({"a"}, {}), params), std::invalid_argument);
  CHECK(cable_generator_name(Presentation({"t", "t1"}, {})) == "t2");
}

TEST_CASE("satellite quotient is a homomorphism onto the pattern group") {
  std::mt19937_64 rng(9);
  for (auto [p, q] : coprime_pairs(8)) {
    const auto params = euclid_uv(p, q);
    const auto source = make_gpq_backend(p, q);
    const auto target = satellite_target_backend(p, q);
    const auto pres = gpq_presentation(p, q);
    for (const auto& r : pres.relators()) {
      CHECK(target->is_identity(satellite_quotient(r, params)) == Equality::Equal);
    }
    for (int i = 0; i < 10; ++i) {
      const Word a = oracle::random_word(rng, {"m", "l", "t"}, 5), b = oracle::random_word(rng, {"m", "l", "t"}, 5);
      const Word qa = satellite_quotient(a, params), qb = satellite_quotient(b, params);
      CHECK(target->equal(satellite_quotient(a * b, params), qa * qb) == Equality::Equal);
      // Equal words in G_{p,q} have equal images.
      CHECK(target->equal(satellite_quotient(*source->canonical(a), params), qa) == Equality::Equal);
    }
  }
}

TEST_CASE("satellite quotient on a cable of the trefoil") {
  const auto companion = torus_knot_presentation(2, 3);
  const auto params = euclid_uv(2, 11);
  const auto g = cable_group(companion, params);
  const auto target = satellite_target_backend(2, 11);
  for (const auto& r : g.relators()) {
    CHECK(target->is_identity(satellite_quotient(r, companion, params)) == Equality::Equal);
  }
  CHECK(target->equal(satellite_quotient(companion.peripheral()->meridian, companion, params),
                      Word::generator("m")) == Equality::Equal);
  CHECK(target->is_identity(satellite_quotient(companion.peripheral()->longitude, companion, params)) ==
        Equality::Equal);
  CHECK_THROWS_AS(satellite_quotient(parse_word("a"), Presentation({"a"}, {parse_word("a^2")}), params),
                  std::invalid_argument);
}

TEST_CASE("left-orderability window of cables") {
  const Rational five(5);
  CHECK(lo_window(2, 11, five, Rational(17, 2)) == LoVerdict::LeftOrderable);
  CHECK(lo_window(2, 11, five, Rational(9)) == LoVerdict::Unknown);
  CHECK(lo_window(2, 11, five, Rational(21)) == LoVerdict::Unknown);
  CHECK(lo_window(2, 11, five, Rational(22)) == LoVerdict::NotLeftOrderable);
  CHECK(lo_window(2, 11, std::nullopt, Rational(22)) == LoVerdict::Unknown);
  CHECK(lo_window(2, 7, five, Rational(30)) == LoVerdict::Unknown);
  CHECK_THROWS_AS(lo_window(2, 4, five, five), std::invalid_argument);
  CHECK(torus_knot_genus(2, 3) == 1);
  CHECK(torus_knot_genus(2, 11) == 5);
  CHECK(torus_knot_genus(3, 5) == 4);
  CHECK(to_string(LoVerdict::NotLeftOrderable) == "NOT_LEFT_ORDERABLE");
}

TEST_CASE("knot identifiers parse and print") {
  for (const char* text : {"torus:2,3", "pretzel:-2,3,7", "twisted-torus:3,5", "cable:2,11(torus:2,3)",
                           "cable:2,45(cable:2,11(torus:2,3))"}) {
    CHECK(KnotId::parse(text).to_string() == text);
  }
  CHECK(KnotId::parse("cable:2,11(torus:2,3)") == KnotId::cable(2, 11, KnotId::torus(2, 3)));
  for (const char* bad : {"torus:2", "torus:2,3,4", "knot:1,2", "cable:2,11", "cable:2,11(torus:2,3", "torus:a,b"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(KnotId::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("decay bounds from the closed-form rules") {
  CHECK(*decayed_registry_lookup(KnotId::torus(2, 3)) == Rational(5));
  CHECK(*decayed_registry_lookup(KnotId::torus(3, 5)) == Rational(14));
  CHECK(*decayed_registry_lookup(KnotId::pretzel(-2, 3, 7)) == Rational(17));
  CHECK(*decayed_registry_lookup(KnotId::twisted_torus(3, 5)) == Rational(17));
  CHECK(*decayed_registry_lookup(KnotId::cable(2, 11, KnotId::torus(2, 3))) == Rational(22));
  CHECK_FALSE(decayed_registry_lookup(KnotId::cable(2, 7, KnotId::torus(2, 3))).has_value());
  CHECK_FALSE(decayed_registry_lookup(KnotId::pretzel(-2, 3, 3)).has_value());
  CHECK_FALSE(decayed_registry_lookup(KnotId::twisted_torus(3, 4)).has_value());
  // Nested: bound 22 for the inner cable, then 2 * 45 since 45/2 > 22.
  CHECK(*decayed_registry_lookup(KnotId::parse("cable:2,45(cable:2,11(torus:2,3))")) == Rational(90));
  CHECK_FALSE(decayed_registry_lookup(KnotId::parse("cable:2,43(cable:2,11(torus:2,3))")).has_value());
}

TEST_CASE("shipped registry loads and agrees with the rules") {
  const auto reg = Registry::load(kData + "/registry.json");
  REQUIRE(reg.entries().size() >= 10);
  for (std::size_t i = 0; i < reg.entries().size(); ++i) {
    const auto& e = reg.entries()[i];
    CHECK(decayed_registry_lookup(e.id) == std::optional<Rational>(e.decay));
    if (i > 0) CHECK(reg.entries()[i - 1].id.to_string() < e.id.to_string());
  }
  CHECK(reg.contains(KnotId::parse("cable:2,11(torus:2,3)")));
  CHECK(Registry::from_json(reg.to_json()).entries().size() == reg.entries().size());
}

TEST_CASE("registry rejects inconsistent records and extends by cabling") {
  auto reg = Registry::load(kData + "/registry.json");
  const auto added = reg.add_cable(2, 13, KnotId::torus(2, 3));
  CHECK(added.decay == Rational(26));
  CHECK(reg.contains(KnotId::cable(2, 13, KnotId::torus(2, 3))));
  CHECK_THROWS_AS(reg.add_cable(2, 9, KnotId::torus(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(reg.add_cable(2, 31, KnotId::torus(5, 7)), std::invalid_argument);

  using nlohmann::json;
  const json wrong = json::array({json{{"id", "torus:2,3"}, {"kind", "torus"}, {"params", {2, 3}}, {"decay", "6"}}});
  CHECK_THROWS_AS(Registry::from_json(wrong), std::invalid_argument);
  const json rec{{"id", "torus:2,3"}, {"kind", "torus"}, {"params", {2, 3}}, {"decay", "5"}};
  CHECK_NOTHROW(Registry::from_json(json::array({rec})));
  CHECK_THROWS_AS(Registry::from_json(json::array({rec, rec})), std::invalid_argument);
  CHECK_THROWS_AS(Registry::from_json(json::object()), std::invalid_argument);
}
