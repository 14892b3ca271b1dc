#include "decaykit/cli/report.hpp"

namespace decaykit {

using nlohmann::json;

std::string tool_version() { return DECAYKIT_VERSION; }

json Report::to_json(bool with_timing) const {
  json out{{"command", command}, {"inputs", inputs}, {"verdict", verdict}, {"details", details},
           {"version", tool_version()}};
  if (with_timing) out["timing_ms"] = timing_ms;
  return out;
}

std::string render(const Report& report, bool with_timing) { return report.to_json(with_timing).dump(2) + "\n"; }

std::string canonical_text(const json& report) {
  json copy = report;
  if (copy.is_object()) copy.erase("timing_ms");
  return copy.dump(2);
}

}  // namespace decaykit
