#pragma once

#include <json.hpp>

#include <string>

namespace decaykit {

/// Envelope of every command-line result. Serialized with sorted keys, so
/// repeated runs give identical bytes apart from timing_ms.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::string verdict;
  nlohmann::json details = nlohmann::json::object();
  double timing_ms = 0.0;

  nlohmann::json to_json(bool with_timing = true) const;
};

/// Pretty-printed report text ending in a newline.
std::string render(const Report& report, bool with_timing = true);

/// The report text with timing_ms removed, for comparing runs.
std::string canonical_text(const nlohmann::json& report);

std::string tool_version();

}  // namespace decaykit
