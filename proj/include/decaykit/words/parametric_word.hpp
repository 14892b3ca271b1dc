#pragma once

#include "decaykit/words/affine.hpp"
#include "decaykit/words/word.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace decaykit {

/// One factor of a parametric word: either a generator syllable g^e or a
/// bracketed block (w)^e. Blocks are what let "(t^-v m^u l^v)^N" stay
/// symbolic in N; they expand on instantiation.
struct ParametricFactor {
  std::string generator;                 // empty for a block
  std::vector<ParametricFactor> block;   // used when generator is empty
  AffineExpr exponent;

  bool is_block() const { return generator.empty(); }
  friend bool operator==(const ParametricFactor&, const ParametricFactor&) = default;
};

/// Lower bounds for parameters (k >= 0, i >= 1, ...).
using ParameterDomains = std::map<std::string, Int, std::less<>>;

class ParametricWord {
 public:
  ParametricWord() = default;
  explicit ParametricWord(std::vector<ParametricFactor> factors);
  static ParametricWord from_word(const Word& w);
  static ParametricWord syllable(std::string generator, AffineExpr exponent);
  static ParametricWord block(const ParametricWord& body, AffineExpr exponent);

  const std::vector<ParametricFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  std::set<std::string> parameters() const;
  std::set<std::string> generators() const;

  /// Substitutes parameters by affine expressions (no reduction).
  ParametricWord substitute(const std::map<std::string, AffineExpr>& replacement) const;

  ParametricWord inverse() const;
  friend ParametricWord operator*(const ParametricWord& a, const ParametricWord& b);

  friend bool operator==(const ParametricWord&, const ParametricWord&) = default;
  std::string to_string() const;

 private:
  std::vector<ParametricFactor> factors_;
};

/// Merges adjacent equal-generator syllables (summing exponents symbolically)
/// and drops syllables and blocks whose exponent is the literal zero. Blocks
/// are reduced recursively; empty blocks disappear. Idempotent.
ParametricWord free_reduce(const ParametricWord& w);

/// Substitutes values and expands blocks, returning a freely reduced word.
/// Throws std::out_of_range for a missing parameter and std::domain_error when
/// a value violates its lower bound in `domains`.
Word instantiate(const ParametricWord& w, const Assignment& values,
                 const ParameterDomains& domains = {});

}  // namespace decaykit
