// decaykit command-line tool. Every command prints one JSON report to
// stdout; --verbose adds a short human summary on stderr.
//
// Exit codes: 0 success / ACCEPT / ASSIGNMENT, 1 semantic reject (REJECT,
// CONTRADICTION, uncovered lookup), 2 input error, 3 search found no
// obstruction either way.

#include "decaykit/cable/cable.hpp"
#include "decaykit/cable/registry.hpp"
#include "decaykit/certificate/builtin.hpp"
#include "decaykit/certificate/kernel.hpp"
#include "decaykit/cli/report.hpp"
#include "decaykit/search/cone_search.hpp"
#include "decaykit/search/presentation_file.hpp"
#include "decaykit/words/abelian.hpp"
#include "decaykit/words/word_syntax.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>

using namespace decaykit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitInput = 2;
constexpr int kExitNoObstruction = 3;

struct Options {
  bool verbose = false;
  std::string registry;
};

struct Outcome {
  Report report;
  int exit_code = kExitOk;
  std::string summary;
};

Registry open_registry(const Options& opts) {
  return Registry::load(opts.registry.empty() ? default_registry_path() : opts.registry);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

Rational companion_decay(const Registry& registry, const KnotId& companion) {
  if (!registry.contains(companion)) {
    throw std::invalid_argument("unknown companion " + companion.to_string() + ": not in the registry");
  }
  return *registry.lookup(companion);
}

json window_json(Int p, Int q, bool decayed) {
  const Int lo = p * q - p - q;
  json w{{"left_orderable_below", Rational(lo).to_string()},
         {"unknown_from", Rational(lo).to_string()}};
  if (decayed) {
    w["unknown_to"] = Rational(p * q).to_string();
    w["not_left_orderable_from"] = Rational(p * q).to_string();
  } else {
    w["unknown_to"] = "infinity";
  }
  return w;
}

Outcome cmd_cable(const Options& opts, Int p, Int q, const std::string& of) {
  const KnotId companion = KnotId::parse(of);
  const CableParams params = euclid_uv(p, q);
  const Registry registry = open_registry(opts);
  const Rational r = companion_decay(registry, companion);
  const CablePeripherals peripherals = cable_peripherals(params);
  const bool applicable = Rational(q, p) > r;

  Outcome out;
  out.report.inputs = {{"p", p}, {"q", q}, {"of", companion.to_string()}};
  json& d = out.report.details;
  d["id"] = KnotId::cable(p, q, companion).to_string();
  d["u"] = params.u;
  d["v"] = params.v;
  d["meridian"] = peripherals.meridian.to_string();
  d["longitude"] = cable_longitude_compact(params).to_string();
  d["longitude_expanded"] = peripherals.longitude.to_string();
  d["companion_decay"] = r.to_string();
  d["window"] = window_json(p, q, applicable);
  if (applicable) {
    out.report.verdict = "DECAYED";
    d["decay"] = Rational(p * q).to_string();
    out.summary = d["id"].get<std::string>() + " is " + std::to_string(p * q) + "-decayed; left-orderable below " +
                  std::to_string(p * q - p - q);
  } else {
    out.report.verdict = "INAPPLICABLE";
    d["decay"] = nullptr;
    d["message"] = "cable decay bound inapplicable: " + Rational(q, p).to_string() + " <= " + r.to_string();
    out.summary = d["message"].get<std::string>();
  }
  return out;
}

Outcome cmd_verify(const std::string& path, Int grid) {
  DecayCertificate cert;
  try {
    cert = certificate_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
  const VerificationReport report = verify_derivation(cert, grid);
  Outcome out;
  out.report.inputs = {{"cert", path}, {"grid", grid}};
  out.report.verdict = report.verdict();
  out.report.details = report.to_json();
  if (report.accepted) {
    const DecayConclusion conclusion = conclude_decay(report);
    out.report.details["conclusion"] = conclusion.to_json();
    out.summary = "ACCEPT: " + conclusion.statement + " (grid-limited, bound " + std::to_string(grid) + ")";
  } else {
    out.exit_code = kExitReject;
    const Failure& f = report.failures.front();
    out.summary = "REJECT: " + (f.judgment.empty() ? std::string("certificate") : f.judgment) + ": " + f.reason;
  }
  return out;
}

Outcome cmd_gen(const Options& opts, Int p, Int q, const std::string& r_text, const std::string& of,
                const std::string& out_path) {
  if (r_text.empty() == of.empty()) throw std::invalid_argument("give exactly one of --r and --of");
  const Rational r = of.empty() ? Rational::parse(r_text) : companion_decay(open_registry(opts), KnotId::parse(of));
  const DecayCertificate cert = builtin_cable_certificate(p, q, r);
  const json cert_json = to_json(cert);
  Outcome out;
  out.report.inputs = {{"p", p}, {"q", q}, {"r", r.to_string()}};
  if (!of.empty()) out.report.inputs["of"] = KnotId::parse(of).to_string();
  out.report.verdict = "GENERATED";
  out.report.details["judgments"] = cert.judgments.size();
  out.report.details["branches"] = cert.branches.size();
  if (out_path.empty()) {
    out.report.details["certificate"] = cert_json;
  } else {
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
    file << cert_json.dump(2) << "\n";
    out.report.inputs["out"] = out_path;
  }
  out.summary = "certificate for cable(" + std::to_string(p) + "," + std::to_string(q) + ") over an " +
                r.to_string() + "-decayed companion: " + std::to_string(cert.judgments.size()) + " judgments";
  return out;
}

Outcome cmd_registry_list(const Options& opts) {
  const Registry registry = open_registry(opts);
  Outcome out;
  out.report.verdict = "OK";
  out.report.details["entries"] = registry.to_json();
  out.summary = std::to_string(registry.entries().size()) + " registry entries";
  return out;
}

Outcome cmd_registry_lookup(const Options& opts, const std::string& id_text) {
  const KnotId id = KnotId::parse(id_text);
  const Registry registry = open_registry(opts);
  Outcome out;
  out.report.inputs = {{"id", id.to_string()}};
  out.report.details["listed"] = registry.contains(id);
  if (auto decay = registry.lookup(id)) {
    out.report.verdict = "DECAYED";
    out.report.details["decay"] = decay->to_string();
    out.summary = id.to_string() + " is " + decay->to_string() + "-decayed";
  } else {
    out.report.verdict = "NOT_COVERED";
    out.report.details["decay"] = nullptr;
    out.exit_code = kExitReject;
    out.summary = id.to_string() + " has no known decay bound";
  }
  return out;
}

Outcome cmd_registry_extend(const Options& opts, Int p, Int q, const std::string& of, bool write) {
  const std::string path = opts.registry.empty() ? default_registry_path() : opts.registry;
  Registry registry = Registry::load(path);
  const RegistryEntry entry = registry.add_cable(p, q, KnotId::parse(of));
  if (write) {
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot write registry '" + path + "'");
    file << registry.to_json().dump(2) << "\n";
  }
  Outcome out;
  out.report.inputs = {{"p", p}, {"q", q}, {"of", entry.id.companion->to_string()}, {"write", write}};
  out.report.verdict = "EXTENDED";
  out.report.details["entry"] = to_json(entry);
  out.report.details["written"] = write;
  out.summary = "added " + entry.id.to_string() + " with decay " + entry.decay.to_string();
  return out;
}

Outcome cmd_lo_window(const Options& opts, Int p, Int q, const std::string& of, const std::string& slope_text) {
  const KnotId companion = KnotId::parse(of);
  euclid_uv(p, q);
  const Registry registry = open_registry(opts);
  const Rational r = companion_decay(registry, companion);
  const Rational slope = Rational::parse(slope_text);
  const LoVerdict verdict = lo_window(p, q, r, slope);
  Outcome out;
  out.report.inputs = {{"p", p}, {"q", q}, {"of", companion.to_string()}, {"slope", slope.to_string()}};
  out.report.verdict = to_string(verdict);
  out.report.details["companion_decay"] = r.to_string();
  out.report.details["window"] = window_json(p, q, Rational(q, p) > r);
  out.summary = "slope " + slope.to_string() + " surgery on cable(" + std::to_string(p) + "," + std::to_string(q) +
                ") of " + companion.to_string() + ": " + to_string(verdict);
  return out;
}

Outcome cmd_search(const std::string& path, int radius, std::size_t budget, Int max_torsion) {
  const PresentationFile file = load_presentation_file(path);
  const WordProblem& backend = *file.backend.backend;
  const ConeSearchInstance inst = enumerate_ball(file.presentation, radius, backend);
  const SearchResult result = cone_search(inst, budget);

  Outcome out;
  out.report.inputs = {{"presentation", path}, {"radius", radius}};
  out.report.verdict = to_string(result.outcome);
  json& d = out.report.details;
  d["name"] = file.name;
  d["backend"] = file.backend.kind;
  d["exact"] = backend.is_exact();
  d["elements"] = inst.elements.size();
  d["products"] = inst.products.size();
  d["conclusive"] = inst.conclusive;
  d["decisions"] = result.decisions;
  d["note"] = result.note;
  if (auto torsion = torsion_scan(inst, backend, max_torsion)) {
    d["torsion"] = {{"element", inst.elements[torsion->element].to_string()}, {"order", torsion->order}};
  } else {
    d["torsion"] = nullptr;
  }
  switch (result.outcome) {
    case SearchOutcome::Assignment: {
      json signs = json::object();
      for (std::size_t e = 0; e < inst.elements.size(); ++e) {
        signs[inst.elements[e].to_string()] = result.signs[e] ? "+" : "-";
      }
      d["assignment"] = signs;
      break;
    }
    case SearchOutcome::Contradiction:
      d["trace"] = to_json(inst, result.refutation);
      out.exit_code = kExitReject;
      break;
    case SearchOutcome::NoObstruction:
      out.exit_code = kExitNoObstruction;
      break;
  }
  out.summary = (file.name.empty() ? path : file.name) + " at radius " + std::to_string(radius) + ": " +
                to_string(result.outcome) + " (" + result.note + ")";
  return out;
}

Outcome cmd_quotient(const Options& opts, Int p, Int q, const std::string& word_text, const std::string& of) {
  const CableParams params = euclid_uv(p, q);
  const Word w = parse_word(word_text);
  Word image;
  Outcome out;
  out.report.inputs = {{"p", p}, {"q", q}, {"word", w.to_string()}};
  if (of.empty()) {
    image = satellite_quotient(w, params);
  } else {
    const KnotId companion = KnotId::parse(of);
    open_registry(opts);  // same registry validation as the other commands
    auto presentation = knot_presentation(companion);
    if (!presentation) throw std::invalid_argument("no presentation available for " + companion.to_string());
    cable_group(*presentation, params).check_word(w);
    image = satellite_quotient(w, *presentation, params);
    out.report.inputs["of"] = companion.to_string();
  }
  const Presentation target = satellite_target(p, q);
  const Abelianization ab(target);
  out.report.verdict = "OK";
  out.report.details["target"] = target.to_string();
  out.report.details["image"] = image.to_string();
  out.report.details["canonical"] = satellite_target_backend(p, q)->canonical(image)->to_string();
  out.report.details["homology"] = ab.image(image).to_string();
  out.summary = w.to_string() + " -> " + image.to_string();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decay certificates, cable bookkeeping and positive-cone search for knot groups", "decaykit"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_flag("--verbose", opts.verbose, "Print a human summary on stderr");
  app.add_option("--registry", opts.registry, "Registry file (default: $DECAYKIT_REGISTRY or the shipped one)");

  std::function<Outcome()> action;
  std::string command;

  Int p = 0, q = 0, grid = kDefaultGridBound, max_torsion = 12;
  int radius = 3;
  std::size_t budget = kDefaultSearchBudget;
  std::string of, path, r_text, out_path, id_text, slope_text, word_text;
  bool write = false;

  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("--p", p, "Cable winding number p >= 2")->required();
    sub->add_option("--q", q, "Cable parameter q, coprime to p")->required();
  };

  auto* cable = app.add_subcommand("cable", "Cable peripheral words, decay bound and LO window");
  add_pq(cable);
  cable->add_option("--of", of, "Companion id, e.g. torus:2,3")->required();
  cable->callback([&] { command = "cable"; action = [&] { return cmd_cable(opts, p, q, of); }; });

  auto* verify = app.add_subcommand("verify-cert", "Check a decay certificate");
  verify->add_option("--cert", path, "Certificate JSON file")->required();
  verify->add_option("--grid", grid, "Grid bound per parameter")->check(CLI::NonNegativeNumber);
  verify->callback([&] { command = "verify-cert"; action = [&] { return cmd_verify(path, grid); }; });

  auto* gen = app.add_subcommand("gen-cert", "Generate the builtin cable certificate");
  add_pq(gen);
  gen->add_option("--r", r_text, "Companion decay bound, e.g. 5 or 9/2");
  gen->add_option("--of", of, "Take the companion decay bound from the registry");
  gen->add_option("--out", out_path, "Write the certificate to this file");
  gen->callback([&] { command = "gen-cert"; action = [&] { return cmd_gen(opts, p, q, r_text, of, out_path); }; });

  auto* registry = app.add_subcommand("registry", "Query or extend the decayed-knot registry");
  registry->require_subcommand(1);
  auto* list = registry->add_subcommand("list", "List registry entries");
  list->callback([&] { command = "registry list"; action = [&] { return cmd_registry_list(opts); }; });
  auto* lookup = registry->add_subcommand("lookup", "Decay bound of one knot");
  lookup->add_option("--id", id_text, "Knot id")->required();
  lookup->callback([&] { command = "registry lookup"; action = [&] { return cmd_registry_lookup(opts, id_text); }; });
  auto* extend = registry->add_subcommand("extend", "Add a cable of a listed knot");
  add_pq(extend);
  extend->add_option("--of", of, "Companion id")->required();
  extend->add_flag("--write", write, "Save the extended registry");
  extend->callback([&] {
    command = "registry extend";
    action = [&] { return cmd_registry_extend(opts, p, q, of, write); };
  });

  auto* window = app.add_subcommand("lo-window", "Classify a surgery slope on a cable");
  add_pq(window);
  window->add_option("--of", of, "Companion id")->required();
  window->add_option("--slope", slope_text, "Surgery slope, e.g. 9 or 17/2")->required();
  window->callback([&] {
    command = "lo-window";
    action = [&] { return cmd_lo_window(opts, p, q, of, slope_text); };
  });

  auto* search = app.add_subcommand("search", "Positive-cone search on a ball of a presented group");
  search->add_option("--presentation", path, "Presentation JSON file")->required();
  search->add_option("--radius", radius, "Ball radius")->check(CLI::PositiveNumber);
  search->add_option("--budget", budget, "Maximum number of case splits");
  search->add_option("--max-torsion", max_torsion, "Largest power tried by the torsion scan");
  search->callback([&] {
    command = "search";
    action = [&] { return cmd_search(path, radius, budget, max_torsion); };
  });

  auto* quotient = app.add_subcommand("quotient", "Image of a cable-group word in the pattern torus-knot group");
  add_pq(quotient);
  quotient->add_option("--word", word_text, "Word over m, l, t (or the cable group's generators with --of)")
      ->required();
  quotient->add_option("--of", of, "Companion id, for words in the full cable group");
  quotient->callback([&] {
    command = "quotient";
    action = [&] { return cmd_quotient(opts, p, q, word_text, of); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = action();
  } catch (const std::exception& e) {
    outcome.report.verdict = "ERROR";
    outcome.report.details["error"] = e.what();
    outcome.exit_code = kExitInput;
    outcome.summary = std::string("error: ") + e.what();
  }
  outcome.report.command = command;
  outcome.report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << render(outcome.report);
  if (opts.verbose || outcome.exit_code == kExitInput) std::cerr << outcome.summary << "\n";
  return outcome.exit_code;
}
