#pragma once

#include "decaykit/cable/knot_id.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace decaykit {

struct RegistryEntry {
  KnotId id;
  Rational decay;
};

/// The shipped list of decayed knots. Every record's decay bound must agree
/// with decayed_registry_lookup(); records are kept sorted by identifier.
class Registry {
 public:
  Registry() = default;

  /// Parses a JSON array of {id, kind, params, decay} records (decay as exact
  /// text such as "5" or "9/2"). Throws std::invalid_argument on malformed
  /// records, duplicates, or a decay bound that disagrees with the rules.
  static Registry from_json(const nlohmann::json& j);
  static Registry load(const std::string& path);

  const std::vector<RegistryEntry>& entries() const { return entries_; }
  bool contains(const KnotId& id) const;

  /// The bound from the rules, whether or not the knot is listed.
  std::optional<Rational> lookup(const KnotId& id) const { return decayed_registry_lookup(id); }

  /// Adds cable(p, q) of a listed companion. Throws std::invalid_argument if
  /// the companion is not listed or q/p does not exceed its bound.
  RegistryEntry add_cable(Int p, Int q, const KnotId& companion);

  nlohmann::json to_json() const;

 private:
  void insert(RegistryEntry entry);
  std::vector<RegistryEntry> entries_;
};

nlohmann::json to_json(const RegistryEntry& entry);

/// Path from DECAYKIT_REGISTRY if set, else the compiled-in default.
std::string default_registry_path();

}  // namespace decaykit
