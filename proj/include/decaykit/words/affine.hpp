#pragma once

#include "decaykit/slope/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace decaykit {

/// Integer values for named parameters (k, N, s, i, ...).
using Assignment = std::map<std::string, Int, std::less<>>;

/// constant + sum(coefficient * parameter); zero coefficients are never stored.
class AffineExpr {
 public:
  AffineExpr() = default;
  AffineExpr(Int constant) : constant_(constant) {}  // NOLINT
  static AffineExpr parameter(std::string name, Int coefficient = 1);

  Int constant() const { return constant_; }
  const std::map<std::string, Int>& terms() const { return terms_; }

  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return constant_ == 0 && terms_.empty(); }

  /// Throws std::out_of_range naming the first unassigned parameter.
  Int evaluate(const Assignment& values) const;

  /// Replaces parameters by expressions; unmapped parameters stay.
  AffineExpr substitute(const std::map<std::string, AffineExpr>& replacement) const;

  void collect_parameters(std::set<std::string>& out) const;

  AffineExpr operator-() const;
  friend AffineExpr operator+(const AffineExpr& a, const AffineExpr& b);
  friend AffineExpr operator-(const AffineExpr& a, const AffineExpr& b);
  friend AffineExpr operator*(Int k, const AffineExpr& a);

  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;

  /// Compact text: "-k", "2s-1", "6", "n-1".
  std::string to_string() const;
  /// Parses "2k+1", "-k - 1", "6*s + 3", "1-n". Throws std::invalid_argument.
  static AffineExpr parse(std::string_view text);

 private:
  void add_term(const std::string& name, Int coefficient);

  Int constant_ = 0;
  std::map<std::string, Int> terms_;
};

}  // namespace decaykit
