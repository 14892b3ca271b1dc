#include "decaykit/cable/knot_id.hpp"

#include "decaykit/cable/cable.hpp"

#include <charconv>
#include <stdexcept>

namespace decaykit {

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw std::invalid_argument("bad knot identifier '" + std::string(text) + "': " + why);
}

std::vector<Int> parse_numbers(std::string_view whole, std::string_view list) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = list.find(',', pos);
    std::string_view item = list.substr(pos, comma == std::string_view::npos ? list.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    Int value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      bad(whole, "'" + std::string(item) + "' is not an integer");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

KnotId KnotId::torus(Int p, Int q) { return KnotId{Kind::Torus, {p, q}, nullptr}; }

KnotId KnotId::pretzel(Int a, Int b, Int c) { return KnotId{Kind::Pretzel, {a, b, c}, nullptr}; }

KnotId KnotId::twisted_torus(Int p, Int q) { return KnotId{Kind::TwistedTorus, {p, q}, nullptr}; }

KnotId KnotId::cable(Int p, Int q, KnotId companion) {
  return KnotId{Kind::Cable, {p, q}, std::make_shared<const KnotId>(std::move(companion))};
}

std::string kind_name(KnotId::Kind kind) {
  switch (kind) {
    case KnotId::Kind::Torus: return "torus";
    case KnotId::Kind::Pretzel: return "pretzel";
    case KnotId::Kind::TwistedTorus: return "twisted-torus";
    case KnotId::Kind::Cable: return "cable";
  }
  return "unknown";
}

KnotId KnotId::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) bad(text, "expected kind:parameters");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);

  if (kind == "cable") {
    auto open = rest.find('(');
    if (open == std::string_view::npos || rest.back() != ')') bad(text, "cable needs (companion)");
    auto params = parse_numbers(text, rest.substr(0, open));
    if (params.size() != 2) bad(text, "cable takes two parameters");
    auto companion = parse(rest.substr(open + 1, rest.size() - open - 2));
    return cable(params[0], params[1], std::move(companion));
  }
  auto params = parse_numbers(text, rest);
  if (kind == "torus") {
    if (params.size() != 2) bad(text, "torus takes two parameters");
    return torus(params[0], params[1]);
  }
  if (kind == "pretzel") {
    if (params.size() != 3) bad(text, "pretzel takes three parameters");
    return pretzel(params[0], params[1], params[2]);
  }
  if (kind == "twisted-torus") {
    if (params.size() != 2) bad(text, "twisted-torus takes two parameters");
    return twisted_torus(params[0], params[1]);
  }
  bad(text, "unknown kind '" + std::string(kind) + "'");
}

std::string KnotId::to_string() const {
  std::string out = kind_name(kind) + ":";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  if (companion) out += "(" + companion->to_string() + ")";
  return out;
}

bool operator==(const KnotId& a, const KnotId& b) {
  if (a.kind != b.kind || a.params != b.params) return false;
  if (!a.companion || !b.companion) return !a.companion && !b.companion;
  return *a.companion == *b.companion;
}

std::optional<Rational> decayed_registry_lookup(const KnotId& id) {
  const auto& k = id.params;
  switch (id.kind) {
    case KnotId::Kind::Torus:
      // Positive torus knots; the trivial cases p or q = 1 are unknots.
      if (k[0] >= 2 && k[1] >= 2 && gcd(k[0], k[1]) == 1) return Rational(k[0] * k[1] - 1);
      return std::nullopt;
    case KnotId::Kind::Pretzel:
      if (k[0] == -2 && k[1] == 3 && k[2] >= 5 && k[2] % 2 == 1) return Rational(10 + k[2]);
      return std::nullopt;
    case KnotId::Kind::TwistedTorus:
      if (k[0] == 3 && k[1] > 0 && k[1] % 3 == 2) return Rational(3 * k[1] + 2);
      return std::nullopt;
    case KnotId::Kind::Cable: {
      if (k[0] < 2 || k[1] < 1 || gcd(k[0], k[1]) != 1) return std::nullopt;
      auto inner = decayed_registry_lookup(*id.companion);
      if (inner && Rational(k[1], k[0]) > *inner) return Rational(k[0] * k[1]);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Presentation> knot_presentation(const KnotId& id) {
  const auto& k = id.params;
  if (id.kind == KnotId::Kind::Torus) {
    if (k[0] < 2 || k[1] < 2 || gcd(k[0], k[1]) != 1) return std::nullopt;
    return torus_knot_presentation(k[0], k[1]);
  }
  if (id.kind == KnotId::Kind::Cable) {
    if (k[0] < 2 || k[1] < 1 || gcd(k[0], k[1]) != 1) return std::nullopt;
    auto companion = knot_presentation(*id.companion);
    if (!companion) return std::nullopt;
    return cable_group(*companion, euclid_uv(k[0], k[1]));
  }
  return std::nullopt;
}

}  // namespace decaykit
