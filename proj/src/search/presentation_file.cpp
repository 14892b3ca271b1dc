#include "decaykit/search/presentation_file.hpp"

#include <fstream>
#include <stdexcept>

namespace decaykit {

using nlohmann::json;

PresentationFile presentation_file_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("presentation file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "generators" && key != "relators" && key != "peripheral" && key != "backend") {
      throw std::invalid_argument("unknown field '" + key + "' in presentation file");
    }
  }
  PresentationFile out;
  out.name = j.value("name", "");
  try {
    out.presentation = presentation_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed presentation: ") + e.what());
  }
  out.backend = backend_from_hint(out.presentation, j.value("backend", json("auto")));
  return out;
}

PresentationFile load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open presentation file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("presentation file '" + path + "' is not valid JSON: " + e.what());
  }
  return presentation_file_from_json(j);
}

}  // namespace decaykit
