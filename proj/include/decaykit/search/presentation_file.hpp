#pragma once

#include "decaykit/words/backend_spec.hpp"

#include <json.hpp>

#include <string>

namespace decaykit {

/// A presentation read from JSON:
///   {"name": "...", "generators": [...], "relators": ["a^2", ...],
///    "backend": <hint, default "auto">}
/// The backend is built (and checked against the relators) on load.
struct PresentationFile {
  std::string name;
  Presentation presentation;
  BackendChoice backend;
};

/// Throws std::invalid_argument on malformed input or a backend hint that
/// does not match the group.
PresentationFile presentation_file_from_json(const nlohmann::json& j);
PresentationFile load_presentation_file(const std::string& path);

}  // namespace decaykit
