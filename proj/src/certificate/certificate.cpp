#include "decaykit/certificate/certificate.hpp"

#include "decaykit/words/word_syntax.hpp"

#include <set>
#include <stdexcept>

namespace decaykit {

using nlohmann::json;

namespace {

void allow_only(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + " must be a JSON object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) throw std::invalid_argument(where + ": unknown field '" + key + "'");
  }
}

std::string text(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw std::invalid_argument(where + ": missing field '" + key + "'");
  if (!j.at(key).is_string()) throw std::invalid_argument(where + ": field '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

std::string optional_text(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || j.at(key).is_null()) return "";
  return text(j, key, where);
}

AffineExpr affine(const json& j, const std::string& where) {
  if (j.is_number_integer()) return AffineExpr(j.get<Int>());
  if (j.is_string()) return AffineExpr::parse(j.get<std::string>());
  throw std::invalid_argument(where + ": expected an integer or an affine expression");
}

Int integer(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(where + ": field '" + key + "' must be an integer");
  }
  return j.at(key).get<Int>();
}

ParametricWord word(const json& j, const char* key, const std::string& where) {
  return parse_parametric_word(text(j, key, where));
}

json affine_json(const AffineExpr& e) { return e.to_string(); }

const json& array(const json& j, const char* key, const std::string& where) {
  static const json empty = json::array();
  if (!j.contains(key)) return empty;
  if (!j.at(key).is_array()) throw std::invalid_argument(where + ": field '" + key + "' must be an array");
  return j.at(key);
}

BranchNode::Kind parse_kind(const std::string& s) {
  if (s == "root") return BranchNode::Kind::Root;
  if (s == "split") return BranchNode::Kind::Split;
  if (s == "sign-change") return BranchNode::Kind::SignChange;
  if (s == "leaf") return BranchNode::Kind::Leaf;
  throw std::invalid_argument("unknown branch kind '" + s + "'");
}

ParameterRole parse_role(const std::string& s) {
  if (s == "universal") return ParameterRole::Universal;
  if (s == "witness") return ParameterRole::Witness;
  if (s == "derived") return ParameterRole::Derived;
  throw std::invalid_argument("unknown parameter role '" + s + "'");
}

}  // namespace

std::string to_string(Sign s) { return s == Sign::Positive ? "POSITIVE" : "NEGATIVE"; }

std::string to_string(Rule r) {
  switch (r) {
    case Rule::Hyp: return "HYP";
    case Rule::Decay: return "DECAY";
    case Rule::Prod: return "PROD";
    case Rule::PowerRoot: return "POWER_ROOT";
    case Rule::Inv: return "INV";
    case Rule::Eq: return "EQ";
  }
  return "HYP";
}

Sign parse_sign(const std::string& text) {
  if (text == "POSITIVE") return Sign::Positive;
  if (text == "NEGATIVE") return Sign::Negative;
  throw std::invalid_argument("unknown sign '" + text + "'");
}

Rule parse_rule(const std::string& text) {
  for (Rule r : {Rule::Hyp, Rule::Decay, Rule::Prod, Rule::PowerRoot, Rule::Inv, Rule::Eq}) {
    if (to_string(r) == text) return r;
  }
  throw std::invalid_argument("unknown rule '" + text + "'");
}

std::string to_string(ParameterRole r) {
  switch (r) {
    case ParameterRole::Universal: return "universal";
    case ParameterRole::Witness: return "witness";
    case ParameterRole::Derived: return "derived";
  }
  return "universal";
}

std::string to_string(BranchNode::Kind k) {
  switch (k) {
    case BranchNode::Kind::Root: return "root";
    case BranchNode::Kind::Split: return "split";
    case BranchNode::Kind::SignChange: return "sign-change";
    case BranchNode::Kind::Leaf: return "leaf";
  }
  return "leaf";
}

DecayCertificate certificate_from_json(const json& j) {
  allow_only(j, {"p", "q", "r", "u", "v", "parameters", "branches", "judgments"}, "certificate");
  DecayCertificate cert;
  cert.p = integer(j, "p", "certificate");
  cert.q = integer(j, "q", "certificate");
  cert.u = integer(j, "u", "certificate");
  cert.v = integer(j, "v", "certificate");
  if (j.contains("r") && j.at("r").is_number_integer()) {
    cert.r = Rational(j.at("r").get<Int>());
  } else {
    cert.r = Rational::parse(text(j, "r", "certificate"));
  }

  for (const auto& pj : array(j, "parameters", "certificate")) {
    const std::string where = "parameter";
    allow_only(pj, {"name", "role", "min", "scope", "numerator", "denominator"}, where);
    Parameter param;
    param.name = text(pj, "name", where);
    param.role = parse_role(text(pj, "role", where));
    param.min = integer(pj, "min", where);
    if (param.role == ParameterRole::Derived) {
      param.scope = text(pj, "scope", where);
      param.numerator = affine(pj.at("numerator"), where);
      param.denominator = affine(pj.at("denominator"), where);
    } else if (pj.contains("scope") || pj.contains("numerator") || pj.contains("denominator")) {
      throw std::invalid_argument("only derived parameters carry a scope and a condition");
    }
    cert.parameters.push_back(std::move(param));
  }

  for (const auto& bj : array(j, "branches", "certificate")) {
    BranchNode node;
    const std::string kind_text = text(bj, "kind", "branch");
    node.kind = parse_kind(kind_text);
    const std::string where = "branch " + optional_text(bj, "id", "branch");
    switch (node.kind) {
      case BranchNode::Kind::Root:
        allow_only(bj, {"id", "kind", "hypothesis", "child"}, where);
        node.hypothesis = word(bj, "hypothesis", where);
        node.child = text(bj, "child", where);
        break;
      case BranchNode::Kind::Split:
        allow_only(bj, {"id", "kind", "pivot", "parameter", "positive", "negative"}, where);
        node.pivot = word(bj, "pivot", where);
        node.parameter = optional_text(bj, "parameter", where);
        node.positive = text(bj, "positive", where);
        node.negative = text(bj, "negative", where);
        break;
      case BranchNode::Kind::SignChange:
        allow_only(bj, {"id", "kind", "family", "index", "lo", "hi", "below", "above", "child"}, where);
        node.family = word(bj, "family", where);
        node.index = text(bj, "index", where);
        node.lo = affine(bj.at("lo"), where);
        node.hi = affine(bj.at("hi"), where);
        node.below = text(bj, "below", where);
        node.above = text(bj, "above", where);
        node.child = optional_text(bj, "child", where);
        break;
      case BranchNode::Kind::Leaf: {
        allow_only(bj, {"id", "kind", "conclusion", "index", "formula"}, where);
        node.conclusion = text(bj, "conclusion", where);
        node.leaf_index = text(bj, "index", where);
        const auto& fj = bj.at("formula");
        allow_only(fj, {"A", "B", "D"}, where + " formula");
        node.formula = {affine(fj.at("A"), where), affine(fj.at("B"), where), affine(fj.at("D"), where)};
        break;
      }
    }
    node.id = text(bj, "id", where);
    cert.branches.push_back(std::move(node));
  }

  for (const auto& jj : array(j, "judgments", "certificate")) {
    const std::string where = "judgment " + optional_text(jj, "id", "judgment");
    allow_only(jj, {"id", "scope", "word", "sign", "rule", "premises", "side"}, where);
    Judgment jd;
    jd.id = text(jj, "id", where);
    jd.scope = text(jj, "scope", where);
    jd.word = word(jj, "word", where);
    jd.sign = parse_sign(text(jj, "sign", where));
    jd.rule = parse_rule(text(jj, "rule", where));
    for (const auto& pr : array(jj, "premises", where)) {
      PremiseRef ref;
      if (pr.is_string()) {
        ref.id = pr.get<std::string>();
      } else {
        allow_only(pr, {"id", "power", "range"}, where + " premise");
        ref.id = text(pr, "id", where);
        if (pr.contains("power")) ref.power = affine(pr.at("power"), where);
        if (pr.contains("range")) {
          const auto& rj = pr.at("range");
          allow_only(rj, {"index", "from", "to", "step"}, where + " range");
          IndexRange range;
          range.index = text(rj, "index", where);
          range.from = affine(rj.at("from"), where);
          range.to = affine(rj.at("to"), where);
          range.step = rj.contains("step") ? integer(rj, "step", where) : 1;
          ref.range = std::move(range);
        }
      }
      jd.premises.push_back(std::move(ref));
    }
    if (jj.contains("side")) {
      const auto& sj = jj.at("side");
      allow_only(sj, {"node", "branch", "at", "power"}, where + " side");
      jd.side.node = optional_text(sj, "node", where);
      jd.side.branch = optional_text(sj, "branch", where);
      if (sj.contains("at")) {
        const auto& aj = sj.at("at");
        if (!aj.is_object()) throw std::invalid_argument(where + ": 'at' must be an object");
        for (const auto& [name, e] : aj.items()) jd.side.at[name] = affine(e, where);
      }
      if (sj.contains("power")) jd.side.power = affine(sj.at("power"), where);
    }
    cert.judgments.push_back(std::move(jd));
  }
  return cert;
}

json to_json(const DecayCertificate& cert) {
  json j;
  j["p"] = cert.p;
  j["q"] = cert.q;
  j["r"] = cert.r.to_string();
  j["u"] = cert.u;
  j["v"] = cert.v;

  json params = json::array();
  for (const auto& param : cert.parameters) {
    json pj{{"name", param.name}, {"role", to_string(param.role)}, {"min", param.min}};
    if (param.role == ParameterRole::Derived) {
      pj["scope"] = param.scope;
      pj["numerator"] = affine_json(param.numerator);
      pj["denominator"] = affine_json(param.denominator);
    }
    params.push_back(std::move(pj));
  }
  j["parameters"] = std::move(params);

  json branches = json::array();
  for (const auto& node : cert.branches) {
    json bj{{"id", node.id}, {"kind", to_string(node.kind)}};
    switch (node.kind) {
      case BranchNode::Kind::Root:
        bj["hypothesis"] = format_parametric_word(node.hypothesis);
        bj["child"] = node.child;
        break;
      case BranchNode::Kind::Split:
        bj["pivot"] = format_parametric_word(node.pivot);
        if (!node.parameter.empty()) bj["parameter"] = node.parameter;
        bj["positive"] = node.positive;
        bj["negative"] = node.negative;
        break;
      case BranchNode::Kind::SignChange:
        bj["family"] = format_parametric_word(node.family);
        bj["index"] = node.index;
        bj["lo"] = affine_json(node.lo);
        bj["hi"] = affine_json(node.hi);
        bj["below"] = node.below;
        bj["above"] = node.above;
        bj["child"] = node.child.empty() ? json(nullptr) : json(node.child);
        break;
      case BranchNode::Kind::Leaf:
        bj["conclusion"] = node.conclusion;
        bj["index"] = node.leaf_index;
        bj["formula"] = {{"A", affine_json(node.formula.a)},
                         {"B", affine_json(node.formula.b)},
                         {"D", affine_json(node.formula.d)}};
        break;
    }
    branches.push_back(std::move(bj));
  }
  j["branches"] = std::move(branches);

  json judgments = json::array();
  for (const auto& jd : cert.judgments) {
    json jj{{"id", jd.id},
            {"scope", jd.scope},
            {"word", format_parametric_word(jd.word)},
            {"sign", to_string(jd.sign)},
            {"rule", to_string(jd.rule)}};
    json premises = json::array();
    for (const auto& ref : jd.premises) {
      if (!ref.power && !ref.range) {
        premises.push_back(ref.id);
        continue;
      }
      json pr{{"id", ref.id}};
      if (ref.power) pr["power"] = affine_json(*ref.power);
      if (ref.range) {
        pr["range"] = {{"index", ref.range->index},
                       {"from", affine_json(ref.range->from)},
                       {"to", affine_json(ref.range->to)},
                       {"step", ref.range->step}};
      }
      premises.push_back(std::move(pr));
    }
    jj["premises"] = std::move(premises);
    if (!jd.side.empty()) {
      json sj = json::object();
      if (!jd.side.node.empty()) sj["node"] = jd.side.node;
      if (!jd.side.branch.empty()) sj["branch"] = jd.side.branch;
      if (!jd.side.at.empty()) {
        json at = json::object();
        for (const auto& [name, e] : jd.side.at) at[name] = affine_json(e);
        sj["at"] = std::move(at);
      }
      if (jd.side.power) sj["power"] = affine_json(*jd.side.power);
      jj["side"] = std::move(sj);
    }
    judgments.push_back(std::move(jj));
  }
  j["judgments"] = std::move(judgments);
  return j;
}

}  // namespace decaykit
