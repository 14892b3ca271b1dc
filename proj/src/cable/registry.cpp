#include "decaykit/cable/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace decaykit {

using nlohmann::json;

json to_json(const RegistryEntry& entry) {
  return json{{"id", entry.id.to_string()},
              {"kind", kind_name(entry.id.kind)},
              {"params", entry.id.params},
              {"decay", entry.decay.to_string()}};
}

Registry Registry::from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("registry must be a JSON array");
  Registry out;
  for (const auto& record : j) {
    if (!record.is_object()) throw std::invalid_argument("registry records must be objects");
    const auto text = record.at("id").get<std::string>();
    KnotId id = KnotId::parse(text);
    if (record.contains("kind") && record.at("kind").get<std::string>() != kind_name(id.kind)) {
      throw std::invalid_argument("registry record " + text + " has the wrong kind");
    }
    if (record.contains("params") && record.at("params").get<std::vector<Int>>() != id.params) {
      throw std::invalid_argument("registry record " + text + " has params that disagree with its id");
    }
    const Rational decay = Rational::parse(record.at("decay").get<std::string>());
    auto expected = decayed_registry_lookup(id);
    if (!expected) throw std::invalid_argument("no decay rule covers registry record " + text);
    if (*expected != decay) {
      throw std::invalid_argument("registry record " + text + " claims decay " + decay.to_string() +
                                  " but the rules give " + expected->to_string());
    }
    if (id.kind == KnotId::Kind::Cable && !out.contains(*id.companion)) {
      // Cable closure only ever builds on listed companions.
      bool listed_later = false;
      for (const auto& other : j) {
        if (other.at("id").get<std::string>() == id.companion->to_string()) listed_later = true;
      }
      if (!listed_later) {
        throw std::invalid_argument("registry record " + text + " cables an unlisted companion");
      }
    }
    if (out.contains(id)) throw std::invalid_argument("registry lists " + text + " twice");
    out.insert(RegistryEntry{std::move(id), decay});
  }
  return out;
}

Registry Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open registry file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("registry file '" + path + "' is not valid JSON: " + e.what());
  }
  return from_json(j);
}

bool Registry::contains(const KnotId& id) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.id == id; });
}

void Registry::insert(RegistryEntry entry) {
  auto pos = std::lower_bound(entries_.begin(), entries_.end(), entry, [](const auto& a, const auto& b) {
    return a.id.to_string() < b.id.to_string();
  });
  entries_.insert(pos, std::move(entry));
}

RegistryEntry Registry::add_cable(Int p, Int q, const KnotId& companion) {
  if (!contains(companion)) {
    throw std::invalid_argument("companion " + companion.to_string() + " is not in the registry");
  }
  KnotId id = KnotId::cable(p, q, companion);
  auto decay = decayed_registry_lookup(id);
  if (!decay) {
    throw std::invalid_argument("cable " + id.to_string() +
                                " is not covered: needs coprime p >= 2 and q/p above the companion bound");
  }
  RegistryEntry entry{id, *decay};
  if (!contains(id)) insert(entry);
  return entry;
}

json Registry::to_json() const {
  json out = json::array();
  for (const auto& e : entries_) out.push_back(decaykit::to_json(e));
  return out;
}

std::string default_registry_path() {
  if (const char* env = std::getenv("DECAYKIT_REGISTRY"); env != nullptr && *env != '\0') return env;
  return DECAYKIT_DEFAULT_REGISTRY;
}

}  // namespace decaykit
