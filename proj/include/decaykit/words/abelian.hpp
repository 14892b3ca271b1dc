#pragma once

#include "decaykit/words/presentation.hpp"

#include <string>
#include <vector>

namespace decaykit {

/// Result of a Smith normal form computation: U * A * V = diag(d_1, ..., d_r),
/// with d_i > 0 and d_i | d_{i+1}. Only V (the column transform) is kept.
struct SmithForm {
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries
  std::vector<std::vector<Int>> column_transform;  // n x n, unimodular
};

/// Smith normal form of an integer matrix with `columns` columns (rows may be empty).
SmithForm smith_normal_form(std::vector<std::vector<Int>> matrix, std::size_t columns);

/// Coordinates of an element of H_1 = Z^free (+) Z/t_1 (+) ... (+) Z/t_k.
struct AbelianImage {
  std::vector<Int> free;
  std::vector<Int> torsion;  // reduced into [0, t_i)
  bool is_zero() const;
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
  std::string to_string() const;
};

/// Abelianization of a finitely presented group, with canonical coordinates.
///
/// Free coordinates are oriented so that the meridian (when the presentation
/// carries one) has a positive first free coordinate; otherwise the first
/// generator with a nonzero image in that coordinate maps positively.
class Abelianization {
 public:
  explicit Abelianization(const Presentation& presentation);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion_orders() const { return torsion_orders_; }

  /// Throws std::invalid_argument for undeclared generators.
  AbelianImage image(const Word& w) const;
  /// Image of each generator (row per generator).
  AbelianImage generator_image(std::size_t index) const;

 private:
  Presentation presentation_;
  std::vector<std::vector<Int>> transform_;
  std::vector<std::size_t> torsion_columns_;
  std::vector<std::size_t> free_columns_;
  std::vector<Int> torsion_orders_;
  std::size_t free_rank_ = 0;
};

/// abelianize(w, pres): image of w in H_1(pres).
AbelianImage abelianize(const Word& w, const Presentation& presentation);

}  // namespace decaykit
