#include "decaykit/words/affine.hpp"

#include <cctype>
#include <stdexcept>

namespace decaykit {

AffineExpr AffineExpr::parameter(std::string name, Int coefficient) {
  AffineExpr e;
  e.add_term(name, coefficient);
  return e;
}

void AffineExpr::add_term(const std::string& name, Int coefficient) {
  if (coefficient == 0) return;
  Int& slot = terms_[name];
  slot += coefficient;
  if (slot == 0) terms_.erase(name);
}

Int AffineExpr::evaluate(const Assignment& values) const {
  Int total = constant_;
  for (const auto& [name, coefficient] : terms_) {
    auto it = values.find(name);
    if (it == values.end()) throw std::out_of_range("missing value for parameter '" + name + "'");
    total += coefficient * it->second;
  }
  return total;
}

AffineExpr AffineExpr::substitute(const std::map<std::string, AffineExpr>& replacement) const {
  AffineExpr out(constant_);
  for (const auto& [name, coefficient] : terms_) {
    auto it = replacement.find(name);
    if (it == replacement.end()) {
      out.add_term(name, coefficient);
    } else {
      out = out + coefficient * it->second;
    }
  }
  return out;
}

void AffineExpr::collect_parameters(std::set<std::string>& out) const {
  for (const auto& [name, coefficient] : terms_) out.insert(name);
}

AffineExpr AffineExpr::operator-() const { return Int(-1) * *this; }

AffineExpr operator+(const AffineExpr& a, const AffineExpr& b) {
  AffineExpr out = a;
  out.constant_ += b.constant_;
  for (const auto& [name, coefficient] : b.terms_) out.add_term(name, coefficient);
  return out;
}

AffineExpr operator-(const AffineExpr& a, const AffineExpr& b) { return a + (-b); }

AffineExpr operator*(Int k, const AffineExpr& a) {
  AffineExpr out(k * a.constant_);
  if (k == 0) return out;
  for (const auto& [name, coefficient] : a.terms_) out.add_term(name, k * coefficient);
  return out;
}

std::string AffineExpr::to_string() const {
  std::string out;
  for (const auto& [name, coefficient] : terms_) {
    if (coefficient < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    Int magnitude = coefficient < 0 ? -coefficient : coefficient;
    if (magnitude != 1) out += std::to_string(magnitude);
    out += name;
  }
  if (constant_ != 0 || out.empty()) {
    if (constant_ >= 0 && !out.empty()) out += "+";
    out += std::to_string(constant_);
  }
  return out;
}

AffineExpr AffineExpr::parse(std::string_view text) {
  AffineExpr out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad exponent '" + std::string(text) + "': " + why);
  };

  skip();
  if (pos == text.size()) fail("empty expression");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    Int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    bool has_number = false;
    Int number = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      number = number * 10 + (text[pos] - '0');
      has_number = true;
      ++pos;
    }
    skip();
    if (pos < text.size() && text[pos] == '*') {
      if (!has_number) fail("'*' without coefficient");
      ++pos;
      skip();
    }
    std::string name;
    if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        name += text[pos++];
      }
    }
    if (!has_number && name.empty()) fail("expected a term");
    Int coefficient = sign * (has_number ? number : 1);
    if (name.empty()) {
      out.constant_ += coefficient;
    } else {
      out.add_term(name, coefficient);
    }
  }
  return out;
}

}  // namespace decaykit
