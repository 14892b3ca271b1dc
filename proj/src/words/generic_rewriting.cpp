#include "decaykit/words/backends.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace decaykit {

namespace {

using Letters = std::vector<int>;

Letters to_letters(const Word& w, const Presentation& pres) {
  Letters out;
  for (const auto& s : w.syllables()) {
    const int code = static_cast<int>(pres.index_of(s.generator)) + 1;
    const Int count = s.exponent > 0 ? s.exponent : -s.exponent;
    for (Int i = 0; i < count; ++i) out.push_back(s.exponent > 0 ? code : -code);
  }
  return out;
}

Letters free_reduce_letters(const Letters& in) {
  Letters out;
  for (int x : in) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

// Triviality is invariant under conjugation, so states are cyclically
// reduced and represented by their least rotation.
Letters cyclic_canonical(Letters w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  Letters core(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
  Letters best = core;
  for (std::size_t r = 1; r < core.size(); ++r) {
    std::rotate(core.begin(), core.begin() + 1, core.end());
    if (core < best) best = core;
  }
  return best;
}

}  // namespace

GenericRewritingBackend::GenericRewritingBackend(Presentation presentation, Int budget)
    : presentation_(std::move(presentation)), abelian_(presentation_), budget_(budget) {
  if (budget_ < 0) throw std::invalid_argument("rewriting budget must be non-negative");
  std::set<Letters> seen;
  for (const auto& r : presentation_.relators()) {
    for (const Word& w : {r, r.inverse()}) {
      Letters base = cyclic_canonical(free_reduce_letters(to_letters(w, presentation_)));
      for (std::size_t k = 0; k < base.size(); ++k) {
        Letters rotated = base;
        std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(k), rotated.end());
        if (seen.insert(rotated).second) insertions_.push_back(rotated);
      }
    }
  }
}

std::optional<Word> GenericRewritingBackend::canonical(const Word& w) const {
  check_alphabet(w);
  return std::nullopt;
}

Equality GenericRewritingBackend::equal(const Word& a, const Word& b) const {
  check_alphabet(a);
  check_alphabet(b);
  const Word difference = a * b.inverse();
  if (difference.empty()) return Equality::Equal;
  if (!abelian_.image(difference).is_zero()) return Equality::NotEqual;

  Letters start = cyclic_canonical(to_letters(difference, presentation_));
  if (start.empty()) return Equality::Equal;
  std::size_t longest_relator = 0;
  for (const auto& r : insertions_) longest_relator = std::max(longest_relator, r.size());
  const std::size_t max_length = start.size() + 2 * longest_relator;

  using Entry = std::pair<std::size_t, Letters>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::set<Letters> visited{start};
  frontier.emplace(start.size(), start);
  Int spent = 0;
  while (!frontier.empty()) {
    Letters current = frontier.top().second;
    frontier.pop();
    for (std::size_t pos = 0; pos <= current.size(); ++pos) {
      for (const auto& r : insertions_) {
        if (spent >= budget_) return Equality::Unknown;
        ++spent;
        Letters next(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), r.begin(), r.end());
        next.insert(next.end(), current.begin() + static_cast<std::ptrdiff_t>(pos), current.end());
        next = cyclic_canonical(free_reduce_letters(next));
        if (next.empty()) return Equality::Equal;
        if (next.size() > max_length) continue;
        if (visited.insert(next).second) frontier.emplace(next.size(), std::move(next));
      }
    }
  }
  return Equality::Unknown;
}

}  // namespace decaykit
