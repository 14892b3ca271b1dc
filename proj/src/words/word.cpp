#include "decaykit/words/word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace decaykit {

Word::Word(std::initializer_list<Syllable> syllables) {
  for (const auto& s : syllables) append(s);
}

Word::Word(std::vector<Syllable> syllables) {
  for (const auto& s : syllables) append(s);
}

Word Word::generator(std::string name, Int exponent) {
  Word w;
  w.append(Syllable{std::move(name), exponent});
  return w;
}

Int Word::length() const {
  Int total = 0;
  for (const auto& s : syllables_) total += std::llabs(s.exponent);
  return total;
}

void Word::append(const Syllable& s) {
  if (s.exponent == 0) return;
  if (s.generator.empty()) throw std::invalid_argument("empty generator name");
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back(s);
}

void Word::append(const Word& w) {
  // Cancellation can cascade past one syllable, e.g. (a b) * (b^-1 a^-1).
  for (const auto& s : w.syllables_) append(s);
}

Word Word::inverse() const {
  Word out;
  out.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    out.syllables_.push_back({it->generator, -it->exponent});
  }
  return out;
}

Word Word::power(Int n) const {
  if (n == 0 || empty()) return {};
  const Word base = n > 0 ? *this : inverse();
  const Int count = n > 0 ? n : -n;
  Word out;
  for (Int i = 0; i < count; ++i) out.append(base);
  return out;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.generator;
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a < b;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace decaykit
