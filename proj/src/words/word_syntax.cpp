#include "decaykit/words/word_syntax.hpp"

#include <cctype>
#include <stdexcept>

namespace decaykit {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParametricWord parse() {
    skip();
    if (pos_ + 1 == text_.size() && text_[pos_] == '1') return {};
    auto factors = parse_sequence();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return ParametricWord(std::move(factors));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("word syntax error at position " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "': " + why);
  }

  void skip() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) {
      ++pos_;
    }
  }

  std::vector<ParametricFactor> parse_sequence() {
    std::vector<ParametricFactor> factors;
    while (true) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      factors.push_back(parse_factor());
    }
    return factors;
  }

  ParametricFactor parse_factor() {
    ParametricFactor f;
    if (text_[pos_] == '(') {
      ++pos_;
      f.block = parse_sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else if (is_name_start(text_[pos_])) {
      while (pos_ < text_.size() && is_name_char(text_[pos_])) f.generator += text_[pos_++];
    } else {
      fail("expected a generator or '('");
    }
    f.exponent = AffineExpr(1);
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      f.exponent = parse_exponent();
    }
    return f;
  }

  AffineExpr parse_exponent() {
    if (pos_ >= text_.size()) fail("missing exponent");
    if (text_[pos_] == '{') {
      auto close = text_.find('}', pos_);
      if (close == std::string_view::npos) fail("missing '}'");
      auto inner = text_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return AffineExpr::parse(inner);
    }
    std::size_t start = pos_;
    if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    } else if (pos_ < text_.size() && is_name_start(text_[pos_])) {
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    } else {
      fail("bad exponent");
    }
    return AffineExpr::parse(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_exponent(const AffineExpr& e) {
  if (e.is_constant()) return std::to_string(e.constant());
  if (e.constant() == 0 && e.terms().size() == 1) {
    const auto& [name, coefficient] = *e.terms().begin();
    if (coefficient == 1) return name;
    if (coefficient == -1) return "-" + name;
  }
  return "{" + e.to_string() + "}";
}

void format_factors(const std::vector<ParametricFactor>& factors, std::string& out) {
  bool first = true;
  for (const auto& f : factors) {
    if (!first) out += ' ';
    first = false;
    if (f.is_block()) {
      out += '(';
      format_factors(f.block, out);
      out += ')';
    } else {
      out += f.generator;
    }
    if (!(f.exponent.is_constant() && f.exponent.constant() == 1)) {
      out += '^';
      out += format_exponent(f.exponent);
    }
  }
}

}  // namespace

ParametricWord parse_parametric_word(std::string_view text) { return Parser(text).parse(); }

Word parse_word(std::string_view text) {
  ParametricWord w = parse_parametric_word(text);
  auto params = w.parameters();
  if (!params.empty()) {
    throw std::invalid_argument("word '" + std::string(text) + "' has parameter '" +
                                *params.begin() + "' where a concrete word is required");
  }
  return instantiate(w, {});
}

std::string format_parametric_word(const ParametricWord& w) {
  if (w.empty()) return "1";
  std::string out;
  format_factors(w.factors(), out);
  return out;
}

}  // namespace decaykit
