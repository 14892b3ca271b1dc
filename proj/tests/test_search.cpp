#include "decaykit/search/cone_search.hpp"
#include "decaykit/search/presentation_file.hpp"
#include "decaykit/words/backend_spec.hpp"
#include "decaykit/words/word_syntax.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace decaykit;

namespace {

const std::string kData = DECAYKIT_TEST_DATA_DIR;

PresentationFile load(const std::string& name) { return load_presentation_file(kData + "/presentations/" + name); }

oracle::SignProblem sign_problem(const ConeSearchInstance& inst) {
  oracle::SignProblem sp;
  sp.n = inst.elements.size();
  sp.inverse = inst.inverse;
  for (const auto& t : inst.products) sp.products.push_back({t.left, t.right, t.result});
  return sp;
}

std::size_t free_ball(int radius, std::size_t rank) {
  std::size_t total = 0, shell = 2 * rank;
  for (int k = 1; k <= radius; ++k) {
    total += shell;
    shell *= 2 * rank - 1;
  }
  return total;
}

}  // namespace

TEST_CASE("ball sizes match independent counts") {
  const auto z2 = load("z2.json");
  for (int r = 1; r <= 5; ++r) {
    CHECK(enumerate_ball(z2.presentation, r, *z2.backend.backend).elements.size() ==
          static_cast<std::size_t>(oracle::l1_ball_count(r)));
  }
  const auto mod = load("z2_free_z3.json");
  for (int r = 1; r <= 6; ++r) {
    CHECK(enumerate_ball(mod.presentation, r, *mod.backend.backend).elements.size() ==
          oracle::z2_free_z3_ball(r).size());
  }
  const Presentation f2({"a", "b"}, {});
  const auto free = detect_backend(f2);
  for (int r = 1; r <= 4; ++r) {
    CHECK(enumerate_ball(f2, r, *free.backend).elements.size() == free_ball(r, 2));
  }
  const auto z3 = load("cyclic3.json");
  CHECK(enumerate_ball(z3.presentation, 4, *z3.backend.backend).elements.size() == 2);
}

TEST_CASE("ball structure: shortlex order, inverse involution, verified products") {
  for (const std::string file : {"z2.json", "z2_free_z3.json", "klein.json", "trefoil.json", "cyclic3.json"}) {
    CAPTURE(file);
    const auto pf = load(file);
    const auto& backend = *pf.backend.backend;
    const auto inst = enumerate_ball(pf.presentation, 3, backend);
    CHECK(inst.conclusive);
    for (std::size_t i = 0; i < inst.elements.size(); ++i) {
      if (i > 0) CHECK(shortlex_less(inst.elements[i - 1], inst.elements[i]));
      CHECK(inst.inverse[inst.inverse[i]] == i);
      CHECK(backend.equal(inst.elements[i].inverse(), inst.elements[inst.inverse[i]]) == Equality::Equal);
      CHECK(backend.is_identity(inst.elements[i]) == Equality::NotEqual);
      CHECK(inst.find(inst.elements[i]) == std::optional<std::size_t>(i));
    }
    for (const auto& t : inst.products) {
      CHECK(backend.equal(inst.elements[t.left] * inst.elements[t.right], inst.elements[t.result]) ==
            Equality::Equal);
    }
  }
}

TEST_CASE("search outcomes agree with exhaustive sign enumeration") {
  const std::vector<std::pair<std::string, int>> cases{{"z2.json", 1},        {"z2.json", 2},
                                                       {"cyclic3.json", 2},   {"z2_free_z3.json", 2},
                                                       {"z2_free_z3.json", 3}, {"klein.json", 2},
                                                       {"trefoil.json", 1}};
  for (const auto& [file, radius] : cases) {
    CAPTURE(file);
    CAPTURE(radius);
    const auto pf = load(file);
    const auto inst = enumerate_ball(pf.presentation, radius, *pf.backend.backend);
    REQUIRE(inst.elements.size() <= 20);
    const auto res = cone_search(inst);
    CHECK((res.outcome == SearchOutcome::Assignment) == oracle::brute_force_consistent(sign_problem(inst)));
    CHECK(res.outcome != SearchOutcome::NoObstruction);
  }
}

TEST_CASE("assignments satisfy every constraint and reverse to assignments") {
  for (const auto& [file, radius] : std::vector<std::pair<std::string, int>>{
           {"z2.json", 3}, {"klein.json", 3}, {"trefoil.json", 3}}) {
    CAPTURE(file);
    const auto pf = load(file);
    const auto inst = enumerate_ball(pf.presentation, radius, *pf.backend.backend);
    const auto res = cone_search(inst);
    REQUIRE(res.outcome == SearchOutcome::Assignment);
    CHECK(check_assignment(inst, res.signs).empty());
    std::vector<bool> reversed(res.signs.size());
    for (std::size_t i = 0; i < reversed.size(); ++i) reversed[i] = !res.signs[i];
    CHECK(check_assignment(inst, reversed).empty());
    auto broken = res.signs;
    broken[0] = !broken[0];
    CHECK_FALSE(check_assignment(inst, broken).empty());
  }
}

TEST_CASE("contradictions come with refutations that replay") {
  for (const auto& [file, radius] : std::vector<std::pair<std::string, int>>{
           {"cyclic3.json", 1}, {"cyclic3.json", 3}, {"z2_free_z3.json", 2}, {"z2_free_z3.json", 4}}) {
    CAPTURE(file);
    CAPTURE(radius);
    const auto pf = load(file);
    const auto inst = enumerate_ball(pf.presentation, radius, *pf.backend.backend);
    const auto res = cone_search(inst);
    REQUIRE(res.outcome == SearchOutcome::Contradiction);
    CHECK(check_refutation(inst, res.refutation, *pf.backend.backend).empty());
    const auto j = to_json(inst, res.refutation);
    CHECK(j.is_array());
    CHECK(j.size() == res.refutation.nodes.size());
    CHECK(j.dump() == to_json(inst, cone_search(inst).refutation).dump());
  }
}

TEST_CASE("tampered refutations are rejected") {
  const auto pf = load("cyclic3.json");
  const auto inst = enumerate_ball(pf.presentation, 3, *pf.backend.backend);
  const auto res = cone_search(inst);
  REQUIRE(res.outcome == SearchOutcome::Contradiction);
  const auto& backend = *pf.backend.backend;

  SUBCASE("flipped forced sign") {
    auto ref = res.refutation;
    bool changed = false;
    for (auto& node : ref.nodes) {
      for (auto& step : node.steps) {
        if (!changed && step.reason != TraceStep::Reason::Decision) {
          step.positive = !step.positive;
          changed = true;
        }
      }
    }
    REQUIRE(changed);
    CHECK_FALSE(check_refutation(inst, ref, backend).empty());
  }
  SUBCASE("conflict removed") {
    auto ref = res.refutation;
    for (auto& node : ref.nodes) {
      if (node.conflict) {
        node.conflict.reset();
        break;
      }
    }
    CHECK_FALSE(check_refutation(inst, ref, backend).empty());
  }
  SUBCASE("bogus product triple") {
    auto ref = res.refutation;
    bool changed = false;
    for (auto& node : ref.nodes) {
      for (auto& step : node.steps) {
        if (!changed && step.reason == TraceStep::Reason::Product) {
          step.triple.result = (step.triple.result + 1) % inst.elements.size();
          changed = true;
        }
      }
    }
    if (changed) CHECK_FALSE(check_refutation(inst, ref, backend).empty());
  }
  SUBCASE("empty tree") { CHECK_FALSE(check_refutation(inst, Refutation{}, backend).empty()); }
}

TEST_CASE("window monotonicity") {
  for (const std::string file : {"z2.json", "klein.json", "trefoil.json", "cyclic3.json", "z2_free_z3.json"}) {
    CAPTURE(file);
    const auto pf = load(file);
    for (int r = 1; r <= 3; ++r) {
      const auto small = enumerate_ball(pf.presentation, r, *pf.backend.backend);
      const auto big = enumerate_ball(pf.presentation, r + 1, *pf.backend.backend);
      const auto rs = cone_search(small), rb = cone_search(big);
      if (rs.outcome == SearchOutcome::Contradiction) CHECK(rb.outcome == SearchOutcome::Contradiction);
      if (rb.outcome == SearchOutcome::Assignment) {
        // The restriction to the smaller window is an assignment there.
        REQUIRE(rs.outcome == SearchOutcome::Assignment);
        std::vector<bool> restricted;
        for (const auto& w : small.elements) restricted.push_back(rb.signs[*big.find(w)]);
        CHECK(check_assignment(small, restricted).empty());
      }
    }
  }
}

TEST_CASE("torsion forces a contradiction") {
  for (Int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const Presentation zn({"a"}, {Word::generator("a", n)});
    const auto choice = detect_backend(zn);
    const auto inst = enumerate_ball(zn, static_cast<int>(n), *choice.backend);
    const auto tw = torsion_scan(inst, *choice.backend, n);
    REQUIRE(tw.has_value());
    CHECK(inst.elements[tw->element] == Word::generator("a"));
    CHECK(tw->order == n);
    const auto res = cone_search(inst);
    CHECK(res.outcome == SearchOutcome::Contradiction);
    CHECK(check_refutation(inst, res.refutation, *choice.backend).empty());
  }
  const auto z2 = load("z2.json");
  CHECK_FALSE(torsion_scan(enumerate_ball(z2.presentation, 3, *z2.backend.backend), *z2.backend.backend, 8));
}

TEST_CASE("inconclusive windows never claim a contradiction") {
  const Presentation mod({"a", "b"}, {parse_word("a^2"), parse_word("b^3")});
  GenericRewritingBackend weak(mod, 0);
  const auto inst = enumerate_ball(mod, 2, weak);
  CHECK_FALSE(inst.conclusive);
  const auto res = cone_search(inst);
  CHECK(res.outcome != SearchOutcome::Contradiction);
}

TEST_CASE("search budget is honoured and results are deterministic") {
  const auto pf = load("z2_free_z3.json");
  const auto inst = enumerate_ball(pf.presentation, 4, *pf.backend.backend);
  const auto capped = cone_search(inst, 0);
  CHECK(capped.outcome == SearchOutcome::NoObstruction);
  const auto a = cone_search(inst), b = cone_search(inst);
  CHECK(a.outcome == b.outcome);
  CHECK(a.decisions == b.decisions);
  CHECK(to_string(SearchOutcome::NoObstruction) == "NO_OBSTRUCTION");
}
