#include "decaykit/words/parametric_word.hpp"

#include "decaykit/words/word_syntax.hpp"

#include <stdexcept>

namespace decaykit {

namespace {

void collect(const std::vector<ParametricFactor>& factors, std::set<std::string>& params,
             std::set<std::string>& gens) {
  for (const auto& f : factors) {
    f.exponent.collect_parameters(params);
    if (f.is_block()) {
      collect(f.block, params, gens);
    } else {
      gens.insert(f.generator);
    }
  }
}

std::vector<ParametricFactor> substitute_all(const std::vector<ParametricFactor>& factors,
                                             const std::map<std::string, AffineExpr>& repl) {
  std::vector<ParametricFactor> out;
  out.reserve(factors.size());
  for (const auto& f : factors) {
    ParametricFactor g;
    g.generator = f.generator;
    g.exponent = f.exponent.substitute(repl);
    if (f.is_block()) g.block = substitute_all(f.block, repl);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<ParametricFactor> reduce_all(const std::vector<ParametricFactor>& factors) {
  std::vector<ParametricFactor> out;
  for (const auto& f : factors) {
    if (f.exponent.is_zero()) continue;
    if (f.is_block()) {
      auto body = reduce_all(f.block);
      if (body.empty()) continue;
      out.push_back(ParametricFactor{"", std::move(body), f.exponent});
      continue;
    }
    if (!out.empty() && !out.back().is_block() && out.back().generator == f.generator) {
      out.back().exponent = out.back().exponent + f.exponent;
      if (out.back().exponent.is_zero()) out.pop_back();
      continue;
    }
    out.push_back(f);
  }
  return out;
}

void expand(const std::vector<ParametricFactor>& factors, const Assignment& values,
            const ParameterDomains& domains, Word& out) {
  for (const auto& f : factors) {
    for (const auto& [name, coefficient] : f.exponent.terms()) {
      auto it = values.find(name);
      if (it == values.end()) throw std::out_of_range("missing value for parameter '" + name + "'");
      auto bound = domains.find(name);
      if (bound != domains.end() && it->second < bound->second) {
        throw std::domain_error("parameter '" + name + "' = " + std::to_string(it->second) +
                                " below its lower bound " + std::to_string(bound->second));
      }
    }
    Int e = f.exponent.evaluate(values);
    if (e == 0) continue;
    if (!f.is_block()) {
      out.append(Syllable{f.generator, e});
      continue;
    }
    Word body;
    expand(f.block, values, domains, body);
    out.append(body.power(e));
  }
}

std::vector<ParametricFactor> invert_all(const std::vector<ParametricFactor>& factors) {
  std::vector<ParametricFactor> out;
  out.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    // (w)^e inverts to (w)^-e; the body keeps its orientation.
    out.push_back(ParametricFactor{it->generator, it->block, -it->exponent});
  }
  return out;
}

}  // namespace

ParametricWord::ParametricWord(std::vector<ParametricFactor> factors) : factors_(std::move(factors)) {}

ParametricWord ParametricWord::from_word(const Word& w) {
  std::vector<ParametricFactor> factors;
  for (const auto& s : w.syllables()) factors.push_back({s.generator, {}, AffineExpr(s.exponent)});
  return ParametricWord(std::move(factors));
}

ParametricWord ParametricWord::syllable(std::string generator, AffineExpr exponent) {
  return ParametricWord({ParametricFactor{std::move(generator), {}, std::move(exponent)}});
}

ParametricWord ParametricWord::block(const ParametricWord& body, AffineExpr exponent) {
  return ParametricWord({ParametricFactor{"", body.factors_, std::move(exponent)}});
}

std::set<std::string> ParametricWord::parameters() const {
  std::set<std::string> params, gens;
  collect(factors_, params, gens);
  return params;
}

std::set<std::string> ParametricWord::generators() const {
  std::set<std::string> params, gens;
  collect(factors_, params, gens);
  return gens;
}

ParametricWord ParametricWord::substitute(const std::map<std::string, AffineExpr>& replacement) const {
  return ParametricWord(substitute_all(factors_, replacement));
}

ParametricWord ParametricWord::inverse() const { return ParametricWord(invert_all(factors_)); }

ParametricWord operator*(const ParametricWord& a, const ParametricWord& b) {
  std::vector<ParametricFactor> factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return ParametricWord(std::move(factors));
}

std::string ParametricWord::to_string() const { return format_parametric_word(*this); }

ParametricWord free_reduce(const ParametricWord& w) { return ParametricWord(reduce_all(w.factors())); }

Word instantiate(const ParametricWord& w, const Assignment& values, const ParameterDomains& domains) {
  Word out;
  expand(w.factors(), values, domains, out);
  return out;
}

}  // namespace decaykit
