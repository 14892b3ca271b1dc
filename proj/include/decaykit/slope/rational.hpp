#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace decaykit {

using Int = std::int64_t;
/// 128-bit intermediate for overflow-free products of two Ints.
__extension__ typedef __int128 WideInt;

/// Greatest common divisor of |a| and |b|; gcd(0, 0) == 0.
Int gcd(Int a, Int b);

/// Floor division and the matching non-negative remainder (divisor > 0).
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

/// Exact rational number in lowest terms with a positive denominator.
///
/// Arithmetic goes through 128-bit intermediates and throws
/// std::overflow_error if a reduced result does not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int value);  // NOLINT(google-explicit-constructor)
  Rational(Int numerator, Int denominator);

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "22", "9/2", "-3/7".
  std::string to_string() const;
  /// Accepts "n" or "n/d" (d may be negative; result is normalized).
  static Rational parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A rational number or +infinity (the meridian direction m/0).
class ExtendedRational {
 public:
  ExtendedRational(Rational value) : value_(value) {}  // NOLINT
  static ExtendedRational infinity() { return ExtendedRational(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: !is_infinite().
  const Rational& value() const { return *value_; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) = default;
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

  /// "inf" for infinity, otherwise Rational::to_string().
  std::string to_string() const;

 private:
  ExtendedRational() = default;
  std::optional<Rational> value_;
};

}  // namespace decaykit
