#pragma once

#include "decaykit/words/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace decaykit {

struct PeripheralPair {
  Word meridian;
  Word longitude;
  friend bool operator==(const PeripheralPair&, const PeripheralPair&) = default;
};

/// Finite presentation <generators | relators>, optionally carrying the
/// meridian and longitude words of a knot group.
class Presentation {
 public:
  Presentation() = default;
  /// Throws std::invalid_argument if a relator or peripheral word uses an
  /// undeclared generator, or a generator is declared twice.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators,
               std::optional<PeripheralPair> peripheral = std::nullopt);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::optional<PeripheralPair>& peripheral() const { return peripheral_; }

  bool has_generator(const std::string& name) const;
  /// Index of a generator; throws std::invalid_argument if undeclared.
  std::size_t index_of(const std::string& name) const;
  /// Throws std::invalid_argument naming the first undeclared generator.
  void check_word(const Word& w) const;

  /// Exponent-sum vector indexed like generators().
  std::vector<Int> exponent_sums(const Word& w) const;

  std::string to_string() const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::optional<PeripheralPair> peripheral_;
};

}  // namespace decaykit
