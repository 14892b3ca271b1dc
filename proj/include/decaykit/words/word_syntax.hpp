#pragma once

// Text syntax for words.
//
//   word     := "1" | factor*
//   factor   := name exponent? | "(" word ")" exponent?
//   exponent := "^" integer | "^" ["-"] name | "^{" affine "}"
//   affine   := term (("+" | "-") term)*,  term := [int ["*"]] name | int
//   name     := [A-Za-z_][A-Za-z0-9_]*
//
// Factors are separated by whitespace or "*". Examples:
//   m^-3 l^2 t          (m^2 l t^-1)^-6 t^2          m^{-k} t^-1 m^{k}
//   (m^{-k} t^-1 m^k)^{n-1} (m^2 l)^{n-1}

#include "decaykit/words/parametric_word.hpp"
#include "decaykit/words/word.hpp"

#include <string>
#include <string_view>

namespace decaykit {

/// Throws std::invalid_argument with the offending position.
ParametricWord parse_parametric_word(std::string_view text);

/// Parses a word that must not mention parameters; freely reduced.
Word parse_word(std::string_view text);

std::string format_parametric_word(const ParametricWord& w);

}  // namespace decaykit
