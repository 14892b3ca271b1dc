#pragma once

#include "decaykit/slope/rational.hpp"
#include "decaykit/words/presentation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace decaykit {

/// Identifier of a knot the registry knows how to talk about.
///
/// Text form: "torus:2,3", "pretzel:-2,3,7", "twisted-torus:3,5",
/// "cable:2,11(torus:2,3)". Cables nest: "cable:2,23(cable:2,11(torus:2,3))".
struct KnotId {
  enum class Kind { Torus, Pretzel, TwistedTorus, Cable };

  Kind kind;
  std::vector<Int> params;
  std::shared_ptr<const KnotId> companion;  // cables only

  static KnotId torus(Int p, Int q);
  static KnotId pretzel(Int a, Int b, Int c);
  static KnotId twisted_torus(Int p, Int q);
  static KnotId cable(Int p, Int q, KnotId companion);

  /// Throws std::invalid_argument on malformed text or parameter counts.
  static KnotId parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const KnotId& a, const KnotId& b);
};

std::string kind_name(KnotId::Kind kind);

/// Decay bound by the closed-form rules: torus(p, q) -> pq - 1;
/// pretzel(-2, 3, q) with odd q >= 5 -> 10 + q; twisted-torus(3, q) with
/// q = 2 mod 3 -> 3q + 2; cable(p, q) of K -> pq when K has bound r and
/// q/p > r. Everything else has no known bound (nullopt).
std::optional<Rational> decayed_registry_lookup(const KnotId& id);

/// A presentation with peripheral pair when one can be built (torus knots
/// and cables of them); nullopt otherwise.
std::optional<Presentation> knot_presentation(const KnotId& id);

}  // namespace decaykit
