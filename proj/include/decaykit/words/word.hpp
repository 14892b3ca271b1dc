#pragma once

#include "decaykit/slope/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace decaykit {

struct Syllable {
  std::string generator;
  Int exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A concrete group word, kept freely reduced: adjacent syllables have
/// distinct generators and no exponent is zero.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Syllable> syllables);
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(std::string name, Int exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  /// Sum of |exponent| over syllables (length as a word in letters).
  Int length() const;

  /// Appends with free reduction at the seam.
  void append(const Syllable& s);
  void append(const Word& w);

  Word inverse() const;
  Word power(Int n) const;

  friend Word operator*(Word a, const Word& b) {
    a.append(b);
    return a;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  /// "m^-3 l^2 t"; the empty word prints as "1".
  std::string to_string() const;

 private:
  std::vector<Syllable> syllables_;
};

/// Shortlex order: letter length first, then lexicographic on syllables.
bool shortlex_less(const Word& a, const Word& b);

/// Commutator a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

}  // namespace decaykit
