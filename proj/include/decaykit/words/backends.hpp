#pragma once

#include "decaykit/words/abelian.hpp"
#include "decaykit/words/presentation.hpp"
#include "decaykit/words/word.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace decaykit {

enum class Equality { Equal, NotEqual, Unknown };

std::string to_string(Equality e);

/// A (possibly partial) solution of the word problem for one group.
///
/// Exact backends return a canonical word for every input; two words are
/// equal in the group iff their canonical words coincide. A non-exact backend
/// returns std::nullopt from canonical() and may answer Unknown.
class WordProblem {
 public:
  virtual ~WordProblem() = default;

  virtual std::string name() const = 0;
  virtual bool is_exact() const = 0;
  virtual const std::vector<std::string>& alphabet() const = 0;

  /// Throws std::invalid_argument for letters outside alphabet().
  virtual std::optional<Word> canonical(const Word& w) const = 0;

  virtual Equality equal(const Word& a, const Word& b) const;
  Equality is_identity(const Word& w) const { return equal(w, Word{}); }

 protected:
  void check_alphabet(const Word& w) const;
};

/// True iff the backend proves the words equal. Unknown counts as false.
bool words_equal(const Word& a, const Word& b, const WordProblem& backend);

/// Free abelian group on the alphabet; canonical words list generators in
/// alphabet order.
class FreeAbelianBackend final : public WordProblem {
 public:
  explicit FreeAbelianBackend(std::vector<std::string> generators);
  std::string name() const override { return "free-abelian"; }
  bool is_exact() const override { return true; }
  const std::vector<std::string>& alphabet() const override { return generators_; }
  std::optional<Word> canonical(const Word& w) const override;

 private:
  std::vector<std::string> generators_;
};

/// Free product of cyclic groups. An order of 0 means infinite cyclic, so a
/// free group is the all-zero case. Finite-order syllables are normalized to
/// exponents in [1, order).
class CyclicFreeProductBackend final : public WordProblem {
 public:
  /// orders[i] is the order of generators[i]; orders must be 0 or >= 2.
  CyclicFreeProductBackend(std::vector<std::string> generators, std::vector<Int> orders);
  std::string name() const override { return "cyclic-free-product"; }
  bool is_exact() const override { return true; }
  const std::vector<std::string>& alphabet() const override { return generators_; }
  std::optional<Word> canonical(const Word& w) const override;

  const std::vector<Int>& orders() const { return orders_; }

 private:
  std::vector<std::string> generators_;
  std::vector<Int> orders_;
};

/// One abelian factor of a central amalgam A *_C B with C infinite cyclic and
/// central in both factors. Every element of the factor is written uniquely
/// as c^e * rep(y), where c generates C and y is a coset coordinate in Z
/// (modulus 0) or Z/modulus. Generators are linear in (e, y); rep(y) is the
/// product of basis[i].generator^(basis[i].exponent * y).
struct AbelianFactor {
  struct Coordinates {
    Int central;
    Int coset;
  };
  std::map<std::string, Coordinates> generators;
  Int modulus = 0;
  std::vector<Syllable> basis;
};

/// Exact normal form for A *_C B with C central (both factors abelian).
///
/// The normal form is c^E r_1 ... r_j with r_i nontrivial coset
/// representatives from alternating factors. Since C is central the edge
/// part collects at the front. This covers the cable peripheral group
/// <m, l, t | [m, l], t^p = m^q l^p> and the torus-knot style groups
/// <x, y | x^p = y^q>.
class CentralAmalgamBackend final : public WordProblem {
 public:
  struct NormalForm {
    Int central = 0;
    std::vector<std::pair<int, Int>> cosets;  // (factor 0 or 1, coordinate)
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
  };

  /// `central_word` must represent the generator c of C. The constructor
  /// checks that each factor's data is coherent (rep(1) has coordinates
  /// (0, 1) and central_word has coordinates (1, 0)); throws
  /// std::invalid_argument otherwise.
  CentralAmalgamBackend(std::string name, AbelianFactor first, AbelianFactor second,
                        Word central_word);

  std::string name() const override { return name_; }
  bool is_exact() const override { return true; }
  const std::vector<std::string>& alphabet() const override { return alphabet_; }
  std::optional<Word> canonical(const Word& w) const override;

  NormalForm normal_form(const Word& w) const;
  Word to_word(const NormalForm& nf) const;

 private:
  AbelianFactor::Coordinates coordinates(int factor, const Syllable& s) const;

  std::string name_;
  AbelianFactor factors_[2];
  Word central_word_;
  std::vector<std::string> alphabet_;
  std::map<std::string, int> owner_;
};

/// The cable peripheral group G_{p,q} = <m, l, t | [m, l], t^p = m^q l^p>.
/// Requires gcd(p, q) = 1 and p >= 2, q >= 1 (throws std::invalid_argument).
std::shared_ptr<const CentralAmalgamBackend> make_gpq_backend(Int p, Int q);

/// Presentation of G_{p,q} over the generators m, l, t.
Presentation gpq_presentation(Int p, Int q);

/// The group <x, y | x^p = y^q> for p, q >= 1, amalgamated over x^p = y^q.
std::shared_ptr<const CentralAmalgamBackend> make_cyclic_amalgam_backend(std::string x, Int p,
                                                                         std::string y, Int q);

/// Canonical form of w in G_{p,q}.
Word normal_form_Gpq(const Word& w, Int p, Int q);

/// Bounded search for a relator derivation: reduces a b^-1 freely, rules out
/// equality through the abelianization, then explores insertions of cyclic
/// conjugates of relators (shortest words first) up to `budget` insertions.
class GenericRewritingBackend final : public WordProblem {
 public:
  static constexpr Int kDefaultBudget = 100000;

  explicit GenericRewritingBackend(Presentation presentation, Int budget = kDefaultBudget);

  std::string name() const override { return "generic-rewriting"; }
  bool is_exact() const override { return false; }
  const std::vector<std::string>& alphabet() const override { return presentation_.generators(); }
  /// Always std::nullopt: no canonical form is claimed.
  std::optional<Word> canonical(const Word& w) const override;
  Equality equal(const Word& a, const Word& b) const override;

  Int budget() const { return budget_; }

 private:
  Presentation presentation_;
  Abelianization abelian_;
  Int budget_;
  std::vector<std::vector<int>> insertions_;  // letters: +-(index + 1)
};

/// A group given by its own presentation but decided in another group
/// through an isomorphism. Both directions of the isomorphism must be given,
/// together with a presentation of the target that its backend decides. The
/// constructor proves the maps are mutually inverse homomorphisms (source
/// side checks go through a bounded GenericRewritingBackend and must succeed)
/// and throws std::invalid_argument when any check fails.
class TransportBackend final : public WordProblem {
 public:
  TransportBackend(Presentation source, std::map<std::string, Word> forward,
                   std::map<std::string, Word> backward, const Presentation& target_presentation,
                   std::shared_ptr<const WordProblem> target);

  std::string name() const override { return "transport(" + target_->name() + ")"; }
  bool is_exact() const override { return target_->is_exact(); }
  const std::vector<std::string>& alphabet() const override { return source_.generators(); }
  std::optional<Word> canonical(const Word& w) const override;
  Equality equal(const Word& a, const Word& b) const override;

  Word image(const Word& w) const;

 private:
  Presentation source_;
  std::map<std::string, Word> forward_;
  std::shared_ptr<const WordProblem> target_;
};

/// Applies a generator substitution (unmapped generators stay).
Word substitute(const Word& w, const std::map<std::string, Word>& images);

}  // namespace decaykit
