#include "decaykit/words/backends.hpp"

#include <algorithm>
#include <stdexcept>

namespace decaykit {

std::string to_string(Equality e) {
  switch (e) {
    case Equality::Equal: return "EQUAL";
    case Equality::NotEqual: return "NOT_EQUAL";
    case Equality::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

void WordProblem::check_alphabet(const Word& w) const {
  const auto& letters = alphabet();
  for (const auto& s : w.syllables()) {
    if (std::find(letters.begin(), letters.end(), s.generator) == letters.end()) {
      throw std::invalid_argument("generator '" + s.generator + "' is not in the alphabet of " +
                                  name());
    }
  }
}

Equality WordProblem::equal(const Word& a, const Word& b) const {
  auto ca = canonical(a);
  auto cb = canonical(b);
  if (!ca || !cb) return Equality::Unknown;
  return *ca == *cb ? Equality::Equal : Equality::NotEqual;
}

bool words_equal(const Word& a, const Word& b, const WordProblem& backend) {
  return backend.equal(a, b) == Equality::Equal;
}

FreeAbelianBackend::FreeAbelianBackend(std::vector<std::string> generators)
    : generators_(std::move(generators)) {}

std::optional<Word> FreeAbelianBackend::canonical(const Word& w) const {
  check_alphabet(w);
  std::vector<Int> sums(generators_.size(), 0);
  for (const auto& s : w.syllables()) {
    auto it = std::find(generators_.begin(), generators_.end(), s.generator);
    sums[static_cast<std::size_t>(it - generators_.begin())] += s.exponent;
  }
  Word out;
  for (std::size_t i = 0; i < generators_.size(); ++i) out.append(Syllable{generators_[i], sums[i]});
  return out;
}

CyclicFreeProductBackend::CyclicFreeProductBackend(std::vector<std::string> generators,
                                                   std::vector<Int> orders)
    : generators_(std::move(generators)), orders_(std::move(orders)) {
  if (generators_.size() != orders_.size()) {
    throw std::invalid_argument("one order per generator is required");
  }
  for (Int n : orders_) {
    if (n < 0 || n == 1) throw std::invalid_argument("cyclic orders must be 0 (infinite) or >= 2");
  }
}

std::optional<Word> CyclicFreeProductBackend::canonical(const Word& w) const {
  check_alphabet(w);
  std::vector<Syllable> stack;
  auto order_of = [&](const std::string& g) {
    auto it = std::find(generators_.begin(), generators_.end(), g);
    return orders_[static_cast<std::size_t>(it - generators_.begin())];
  };
  auto normalize = [&](const std::string& g, Int e) {
    Int n = order_of(g);
    return n == 0 ? e : floor_mod(e, n);
  };
  for (const auto& s : w.syllables()) {
    if (!stack.empty() && stack.back().generator == s.generator) {
      Int e = normalize(s.generator, stack.back().exponent + s.exponent);
      if (e == 0) {
        stack.pop_back();
      } else {
        stack.back().exponent = e;
      }
      continue;
    }
    Int e = normalize(s.generator, s.exponent);
    if (e != 0) stack.push_back(Syllable{s.generator, e});
  }
  return Word(std::move(stack));
}

Word substitute(const Word& w, const std::map<std::string, Word>& images) {
  Word out;
  for (const auto& s : w.syllables()) {
    auto it = images.find(s.generator);
    if (it == images.end()) {
      out.append(s);
    } else {
      out.append(it->second.power(s.exponent));
    }
  }
  return out;
}

TransportBackend::TransportBackend(Presentation source, std::map<std::string, Word> forward,
                                   std::map<std::string, Word> backward,
                                   const Presentation& target_presentation,
                                   std::shared_ptr<const WordProblem> target)
    : source_(std::move(source)), forward_(std::move(forward)), target_(std::move(target)) {
  if (!target_) throw std::invalid_argument("transport needs a target backend");
  for (const auto& r : target_presentation.relators()) {
    if (target_->is_identity(r) != Equality::Equal) {
      throw std::invalid_argument("target relator " + r.to_string() + " is not trivial in " +
                                  target_->name());
    }
  }
  for (const auto& g : source_.generators()) {
    if (!forward_.count(g)) throw std::invalid_argument("no image given for generator '" + g + "'");
  }
  for (const auto& y : target_->alphabet()) {
    if (!backward.count(y)) {
      throw std::invalid_argument("no preimage given for target generator '" + y + "'");
    }
  }
  for (const auto& [y, word] : backward) source_.check_word(word);

  // forward is a homomorphism: relators land on the identity of the target.
  for (const auto& r : source_.relators()) {
    if (target_->is_identity(substitute(r, forward_)) != Equality::Equal) {
      throw std::invalid_argument("relator " + r.to_string() + " is not killed by the given images");
    }
  }
  // forward o backward = id on the target generators.
  for (const auto& y : target_->alphabet()) {
    Word round_trip = substitute(backward.at(y), forward_);
    if (target_->equal(round_trip, Word::generator(y)) != Equality::Equal) {
      throw std::invalid_argument("images are not inverse on target generator '" + y + "'");
    }
  }
  // backward is a homomorphism and backward o forward = id on the source.
  // Both are word-problem questions in the source, so they must succeed
  // within the bounded search.
  GenericRewritingBackend source_check(source_);
  const auto& target_relators = target_presentation.relators();
  for (const auto& r : target_relators) {
    if (source_check.is_identity(substitute(r, backward)) != Equality::Equal) {
      throw std::invalid_argument("preimages do not respect target relation " + r.to_string());
    }
  }
  for (const auto& g : source_.generators()) {
    Word round_trip = substitute(forward_.at(g), backward);
    if (source_check.equal(round_trip, Word::generator(g)) != Equality::Equal) {
      throw std::invalid_argument("images are not inverse on generator '" + g + "'");
    }
  }
}

Word TransportBackend::image(const Word& w) const {
  check_alphabet(w);
  return substitute(w, forward_);
}

std::optional<Word> TransportBackend::canonical(const Word& w) const {
  return target_->canonical(image(w));
}

Equality TransportBackend::equal(const Word& a, const Word& b) const {
  return target_->equal(image(a), image(b));
}

}  // namespace decaykit
