#pragma once

// Finite positive-cone search. A left order restricts to a sign assignment
// on any finite window of nontrivial elements such that an element and its
// inverse have opposite signs and a product of two positive elements that
// lies in the window is positive. If no such assignment exists the group is
// not left-orderable; finding one proves nothing.

#include "decaykit/words/backends.hpp"
#include "decaykit/words/presentation.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace decaykit {

struct ProductTriple {
  std::size_t left;
  std::size_t right;
  std::size_t result;
  friend bool operator==(const ProductTriple&, const ProductTriple&) = default;
};

struct ConeSearchInstance {
  /// Shortlex-least representative of each element; identity excluded,
  /// sorted in shortlex order (which is also the search's variable order).
  std::vector<Word> elements;
  std::vector<std::size_t> inverse;
  /// left * right = result, for products landing in the window. Products
  /// equal to the identity are exactly the inverse pairs.
  std::vector<ProductTriple> products;
  /// True when every element is proved nontrivial and every pair of
  /// elements proved distinct; only then is a contradiction conclusive.
  bool conclusive = true;

  std::optional<std::size_t> find(const Word& representative) const;
};

/// All nontrivial elements represented by freely reduced words of length
/// <= radius. With a non-exact backend, words whose equality is Unknown stay
/// separate elements and the instance is marked inconclusive.
ConeSearchInstance enumerate_ball(const Presentation& presentation, int radius, const WordProblem& backend);

struct TorsionWitness {
  std::size_t element;
  Int order;
};

/// First element (in variable order) with g^d = 1 for some 2 <= d <= max_power.
std::optional<TorsionWitness> torsion_scan(const ConeSearchInstance& inst, const WordProblem& backend,
                                           Int max_power);

/// One entry of a contradiction trace: a sign fixed for an element, either
/// by a case split or forced by an inverse pair or a product triple.
struct TraceStep {
  enum class Reason { Decision, Inverse, Product };
  Reason reason = Reason::Decision;
  std::size_t element = 0;
  bool positive = true;
  std::size_t inverse_of = 0;          // Inverse: the element whose sign forces this one
  ProductTriple triple{0, 0, 0};       // Product
};

/// A constraint violated once every step of a branch has been applied.
struct Conflict {
  bool from_inverse = true;
  std::size_t element = 0;             // inverse conflict: element and its inverse agree
  ProductTriple triple{0, 0, 0};       // product conflict: left, right positive, result negative
};

/// Refutation tree. Node 0 is the root; each node applies its steps, then
/// either hits `conflict` or splits on `split_element` into two children
/// whose first step is the corresponding decision.
struct RefutationNode {
  std::vector<TraceStep> steps;
  std::optional<Conflict> conflict;
  std::size_t split_element = 0;
  std::size_t positive_child = 0;
  std::size_t negative_child = 0;
};

struct Refutation {
  std::vector<RefutationNode> nodes;
};

enum class SearchOutcome { Assignment, Contradiction, NoObstruction };

std::string to_string(SearchOutcome o);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NoObstruction;
  std::vector<bool> signs;            // Assignment: true = positive
  Refutation refutation;              // Contradiction (also kept for inconclusive windows)
  std::string note;
  std::size_t decisions = 0;
};

inline constexpr std::size_t kDefaultSearchBudget = 1000000;

/// Backtracking over signs with unit propagation; positive is tried first
/// and variables are taken in element order. Gives up with NoObstruction
/// after `budget` decisions, and reports NoObstruction instead of a
/// contradiction on an inconclusive window.
SearchResult cone_search(const ConeSearchInstance& inst, std::size_t budget = kDefaultSearchBudget);

/// Empty string if the assignment satisfies every constraint, else the
/// first violated one.
std::string check_assignment(const ConeSearchInstance& inst, const std::vector<bool>& signs);

/// Replays a refutation from scratch: every forced step must follow from
/// the cited constraint, every leaf must end in a genuine conflict, splits
/// must cover both signs, and each cited inverse pair and product triple is
/// re-proved with `backend`. Empty string on success.
std::string check_refutation(const ConeSearchInstance& inst, const Refutation& refutation,
                             const WordProblem& backend);

nlohmann::json to_json(const ConeSearchInstance& inst, const Refutation& refutation);

}  // namespace decaykit
