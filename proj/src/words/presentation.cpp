#include "decaykit/words/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace decaykit {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                           std::optional<PeripheralPair> peripheral)
    : generators_(std::move(generators)),
      relators_(std::move(relators)),
      peripheral_(std::move(peripheral)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].empty()) throw std::invalid_argument("empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i] == generators_[j]) {
        throw std::invalid_argument("generator '" + generators_[i] + "' declared twice");
      }
    }
  }
  for (const auto& r : relators_) check_word(r);
  if (peripheral_) {
    check_word(peripheral_->meridian);
    check_word(peripheral_->longitude);
  }
}

bool Presentation::has_generator(const std::string& name) const {
  return std::find(generators_.begin(), generators_.end(), name) != generators_.end();
}

std::size_t Presentation::index_of(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw std::invalid_argument("undeclared generator '" + name + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

void Presentation::check_word(const Word& w) const {
  for (const auto& s : w.syllables()) index_of(s.generator);
}

std::vector<Int> Presentation::exponent_sums(const Word& w) const {
  std::vector<Int> sums(generators_.size(), 0);
  for (const auto& s : w.syllables()) sums[index_of(s.generator)] += s.exponent;
  return sums;
}

std::string Presentation::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) out += ", ";
    out += relators_[i].to_string();
  }
  return out + ">";
}

}  // namespace decaykit
