#include "decaykit/certificate/kernel.hpp"

#include "decaykit/cable/cable.hpp"
#include "decaykit/words/backends.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

namespace decaykit {

using nlohmann::json;

namespace {

// Raised for a structural problem of one judgment or node; recorded as a
// failure without a grid point.
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr Int kDerivedSearchLimit = 1000000;
constexpr Int kRangeTermLimit = 100000;

struct GridSpec {
  std::vector<std::pair<std::string, std::pair<Int, Int>>> axes;  // sorted by name
  std::vector<const Parameter*> derived;
};

std::string grouped(const AffineExpr& e) {
  const std::string text = e.to_string();
  return e.is_constant() || (e.constant() == 0 && e.terms().size() == 1) ? text : "(" + text + ")";
}

// "i", "3i" or "(k+1)i".
std::string scaled(const AffineExpr& a, const std::string& index) {
  if (a == AffineExpr(1)) return index;
  return grouped(a) + index;
}

json point_json(const Assignment& point) {
  json out = json::object();
  for (const auto& [k, v] : point) out[k] = v;
  return out;
}

class Kernel {
 public:
  Kernel(const DecayCertificate& cert, Int bound) : cert_(cert), bound_(bound) {}

  VerificationReport run() {
    report_.p = cert_.p;
    report_.q = cert_.q;
    report_.r = cert_.r;
    report_.grid_bound = bound_;
    if (bound_ < 0) throw std::invalid_argument("grid bound must be non-negative");
    if (check_header() && check_parameters() && check_tree()) {
      index_judgments();
      for (std::size_t i = 0; i < cert_.judgments.size(); ++i) check_judgment(i);
      for (const auto& node : cert_.branches) {
        if (reached_.count(node.id) != 0) check_node(node);
      }
      check_usage();
    }
    std::sort(report_.leaves.begin(), report_.leaves.end(),
              [](const LeafResult& a, const LeafResult& b) { return a.leaf < b.leaf; });
    report_.accepted = report_.failures.empty() && !report_.leaves.empty();
    if (report_.failures.empty() && report_.leaves.empty()) {
      report_.failures.push_back({"", {}, "certificate has no leaves"});
    }
    return report_;
  }

 private:
  // ---- failures ----

  bool fail(const std::string& item, const Assignment& point, const std::string& reason) {
    if (failed_.insert(item).second) report_.failures.push_back({item, point, reason});
    return false;
  }

  // ---- header, parameters, tree ----

  bool check_header() {
    const Int p = cert_.p, q = cert_.q;
    if (p < 2 || q < 1) return fail("", {}, "cable parameters need p >= 2 and q >= 1");
    if (gcd(p, q) != 1) return fail("", {}, "cable parameters p and q must be coprime");
    const CableParams expected = euclid_uv(p, q);
    if (cert_.u != expected.u || cert_.v != expected.v) {
      return fail("", {}, "u, v must be the minimal solution of p u - q v = 1, namely u=" +
                              std::to_string(expected.u) + " v=" + std::to_string(expected.v));
    }
    if (cert_.r <= Rational(0)) return fail("", {}, "companion decay bound r must be positive");
    if (Rational(q, p) <= cert_.r) return fail("", {}, "q/p must exceed the companion decay bound r");
    gpq_ = make_gpq_backend(p, q);
    const Word mc{{"m", expected.u}, {"l", expected.v}, {"t", -expected.v}};
    meridian_ = mc;
    longitude_ = mc.power(-p * q) * Word::generator("t", p);
    return true;
  }

  bool check_parameters() {
    for (const auto& param : cert_.parameters) {
      if (param.name.empty()) return fail("", {}, "parameter with an empty name");
      if (param.role == ParameterRole::Derived) {
        if (param.scope.empty()) return fail("", {}, "derived parameter " + param.name + " needs a scope");
        for (const auto* other : derived_) {
          if (other->name == param.name && other->scope == param.scope) {
            return fail("", {}, "derived parameter " + param.name + " declared twice in one scope");
          }
        }
        if (plain_.count(param.name) != 0) {
          return fail("", {}, "parameter " + param.name + " is both derived and not derived");
        }
        derived_.push_back(&param);
      } else {
        if (!param.scope.empty()) return fail("", {}, "only derived parameters take a scope");
        if (!plain_.emplace(param.name, &param).second) {
          return fail("", {}, "parameter " + param.name + " declared twice");
        }
        domains_[param.name] = param.min;
      }
    }
    for (const auto* d : derived_) {
      if (plain_.count(d->name) != 0) {
        return fail("", {}, "parameter " + d->name + " is both derived and not derived");
      }
    }
    return true;
  }

  bool check_tree() {
    const BranchNode* root = nullptr;
    for (const auto& node : cert_.branches) {
      if (!nodes_.emplace(node.id, &node).second) return fail(node.id, {}, "branch id used twice");
      if (node.kind == BranchNode::Kind::Root) {
        if (root != nullptr) return fail(node.id, {}, "second root node");
        root = &node;
      }
    }
    if (root == nullptr) return fail("", {}, "certificate has no root node");
    root_ = root->id;

    bool ok = true;
    std::vector<const BranchNode*> stack{root};
    reached_.insert(root->id);
    while (!stack.empty()) {
      const BranchNode* node = stack.back();
      stack.pop_back();
      std::vector<std::string> children;
      switch (node->kind) {
        case BranchNode::Kind::Root:
          if (node->child.empty()) {
            ok = fail(node->id, {}, "root has no child");
            continue;
          }
          children = {node->child};
          break;
        case BranchNode::Kind::Split:
          if (node->positive.empty() || node->negative.empty()) {
            ok = fail(node->id, {}, "non-exhaustive split: both branches are required");
            continue;
          }
          children = {node->positive, node->negative};
          break;
        case BranchNode::Kind::SignChange:
          if (!node->child.empty()) children = {node->child};
          break;
        case BranchNode::Kind::Leaf:
          break;
      }
      for (const auto& c : children) {
        auto it = nodes_.find(c);
        if (it == nodes_.end()) {
          ok = fail(node->id, {}, "non-exhaustive: branch node " + c + " does not exist");
          continue;
        }
        if (it->second->kind == BranchNode::Kind::Root || !reached_.insert(c).second) {
          ok = fail(node->id, {}, "branch node " + c + " is reached twice; branches must form a tree");
          continue;
        }
        parent_[c] = node->id;
        stack.push_back(it->second);
      }
    }
    for (const auto& node : cert_.branches) {
      if (reached_.count(node.id) == 0) ok = fail(node.id, {}, "branch node is not reachable from the root");
    }
    return ok;
  }

  // Node ids from the root down to `id`.
  std::vector<std::string> path_to(const std::string& id) const {
    std::vector<std::string> path{id};
    for (auto it = parent_.find(id); it != parent_.end(); it = parent_.find(it->second)) {
      path.push_back(it->second);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  bool is_ancestor_or_self(const std::string& a, const std::string& b) const {
    const auto path = path_to(b);
    return std::find(path.begin(), path.end(), a) != path.end();
  }

  // True iff the path to `scope` uses the edge parent -> child.
  bool path_has_edge(const std::string& scope, const std::string& parent, const std::string& child) const {
    const auto path = path_to(scope);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (path[i] == parent && path[i + 1] == child) return true;
    }
    return false;
  }

  std::pair<Int, Int> sign_change_range(const BranchNode& node) const {
    if (!node.lo.is_constant() || !node.hi.is_constant()) {
      throw CheckError("sign-change bounds of " + node.id + " must be constants");
    }
    return {node.lo.constant(), node.hi.constant()};
  }

  // ---- parameter resolution ----

  const Parameter& declared(const std::string& name) const {
    auto it = plain_.find(name);
    if (it == plain_.end()) throw CheckError("parameter " + name + " is not declared");
    return *it->second;
  }

  // Adds `name`, as seen from `scope`, to the grid.
  void resolve(const std::string& name, const std::string& scope, GridSpec& grid, bool allow_derived = true) const {
    for (const auto& axis : grid.axes) {
      if (axis.first == name) return;
    }
    for (const auto* d : grid.derived) {
      if (d->name == name) return;
    }
    const auto path = path_to(scope);
    // Derived: the deepest declaration whose scope lies on the path.
    const Parameter* derived = nullptr;
    for (const auto& node : path) {
      for (const auto* d : derived_) {
        if (d->name == name && d->scope == node) derived = d;
      }
    }
    if (derived != nullptr) {
      if (!allow_derived) throw CheckError("derived parameter " + name + " may not depend on another derived one");
      std::set<std::string> deps;
      derived->numerator.collect_parameters(deps);
      derived->denominator.collect_parameters(deps);
      for (const auto& dep : deps) {
        if (dep != name) resolve(dep, derived->scope, grid, false);
      }
      grid.derived.push_back(derived);
      return;
    }
    const Parameter& param = declared(name);
    if (param.role == ParameterRole::Universal) {
      grid.axes.push_back({name, {param.min, param.min + bound_}});
    } else {
      std::optional<std::pair<Int, Int>> range;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const BranchNode& node = *nodes_.at(path[i]);
        if (node.kind == BranchNode::Kind::Split && node.parameter == name && node.positive == path[i + 1]) {
          if (range) throw CheckError("witness " + name + " is bound twice on the path to " + scope);
          range = {param.min, param.min + bound_};
        } else if (node.kind == BranchNode::Kind::SignChange && node.index == name) {
          if (range) throw CheckError("witness " + name + " is bound twice on the path to " + scope);
          const auto [lo, hi] = sign_change_range(node);
          range = {lo + 1, hi};
        }
      }
      if (!range) throw CheckError("witness " + name + " is not bound on the path to " + scope);
      grid.axes.push_back({name, *range});
    }
    std::sort(grid.axes.begin(), grid.axes.end());
  }

  Int derived_value(const Parameter& d, const Assignment& point) const {
    Assignment values = point;
    for (Int s = d.min; s <= d.min + kDerivedSearchLimit; ++s) {
      values[d.name] = s;
      const Int num = d.numerator.evaluate(values);
      const Int den = d.denominator.evaluate(values);
      if (den > 0 && Rational(num, den) > cert_.r) return s;
    }
    throw std::domain_error("unsatisfiable side condition for derived parameter " + d.name);
  }

  // Runs `check` at every grid point; records the first failure under `item`.
  bool run_grid(const std::string& item, const GridSpec& grid,
                const std::function<std::optional<std::string>(const Assignment&)>& check) {
    Assignment point;
    bool ok = true;
    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
      if (!ok) return;
      if (depth == grid.axes.size()) {
        Assignment full = point;
        try {
          for (const auto* d : grid.derived) full[d->name] = derived_value(*d, point);
          ++report_.instances_checked;
          if (auto reason = check(full)) ok = fail(item, full, *reason);
        } catch (const std::exception& e) {
          ok = fail(item, full, e.what());
        }
        return;
      }
      const auto& [name, range] = grid.axes[depth];
      for (Int value = range.first; value <= range.second && ok; ++value) {
        point[name] = value;
        walk(depth + 1);
      }
      point.erase(name);
    };
    walk(0);
    return ok;
  }

  Word inst(const ParametricWord& w, const Assignment& point, const std::string& skip = "") const {
    if (skip.empty()) return instantiate(w, point, domains_);
    ParameterDomains domains = domains_;
    domains.erase(skip);
    return instantiate(w, point, domains);
  }

  // ---- judgments ----

  void index_judgments() {
    for (std::size_t i = 0; i < cert_.judgments.size(); ++i) {
      if (!index_.emplace(cert_.judgments[i].id, i).second) {
        fail(cert_.judgments[i].id, {}, "judgment id used twice");
      }
    }
  }

  const Judgment* premise_judgment(const Judgment& j, const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw CheckError("premise " + id + " does not exist");
    if (it->second >= index_.at(j.id)) throw CheckError("premise " + id + " does not precede the judgment");
    const Judgment& p = cert_.judgments[it->second];
    if (!is_ancestor_or_self(p.scope, j.scope)) {
      throw CheckError("premise " + id + " is scoped to " + p.scope + ", which does not enclose " + j.scope);
    }
    return &p;
  }

  void require_plain_premises(const Judgment& j, std::size_t count) const {
    if (j.premises.size() != count) {
      throw CheckError(to_string(j.rule) + " takes exactly " + std::to_string(count) + " premise(s)");
    }
    for (const auto& pr : j.premises) {
      if (pr.power || pr.range) throw CheckError(to_string(j.rule) + " premises take no power or range");
    }
  }

  // The hypothesis a HYP judgment cites, with the names that stay free.
  struct HypTarget {
    const BranchNode* node;
    Sign sign;
  };

  HypTarget hyp_target(const Judgment& j) const {
    if (!j.premises.empty()) throw CheckError("HYP takes no premises");
    if (j.side.power) throw CheckError("HYP takes no power");
    auto it = nodes_.find(j.side.node);
    if (it == nodes_.end()) throw CheckError("HYP cites unknown node '" + j.side.node + "'");
    const BranchNode& node = *it->second;
    const std::string& b = j.side.branch;
    switch (node.kind) {
      case BranchNode::Kind::Root:
        if (!b.empty() || !j.side.at.empty()) throw CheckError("the root hypothesis takes no branch or at");
        return {&node, Sign::Positive};
      case BranchNode::Kind::Split:
        if (b == "positive") {
          if (!j.side.at.empty()) throw CheckError("a positive split hypothesis takes no at");
          if (!path_has_edge(j.scope, node.id, node.positive)) {
            throw CheckError("scope " + j.scope + " is not under the positive branch of " + node.id);
          }
          return {&node, Sign::Positive};
        }
        if (b == "negative") {
          std::set<std::string> keys;
          for (const auto& kv : j.side.at) keys.insert(kv.first);
          const std::set<std::string> expected =
              node.parameter.empty() ? std::set<std::string>{} : std::set<std::string>{node.parameter};
          if (keys != expected) throw CheckError("a negative split hypothesis must bind exactly the split parameter");
          if (!path_has_edge(j.scope, node.id, node.negative)) {
            throw CheckError("scope " + j.scope + " is not under the negative branch of " + node.id);
          }
          return {&node, Sign::Negative};
        }
        throw CheckError("split hypotheses are 'positive' or 'negative'");
      case BranchNode::Kind::SignChange:
        if (!j.side.at.empty()) throw CheckError("a sign-change hypothesis takes no at");
        if (node.child.empty() || !path_has_edge(j.scope, node.id, node.child)) {
          throw CheckError("scope " + j.scope + " is not under sign-change node " + node.id);
        }
        if (b == "upper") return {&node, Sign::Positive};
        if (b == "lower") return {&node, Sign::Negative};
        throw CheckError("sign-change hypotheses are 'upper' or 'lower'");
      case BranchNode::Kind::Leaf:
        break;
    }
    throw CheckError("HYP cannot cite leaf " + node.id);
  }

  Word hyp_word(const Judgment& j, const HypTarget& target, const Assignment& point) const {
    const BranchNode& node = *target.node;
    switch (node.kind) {
      case BranchNode::Kind::Root:
        return inst(node.hypothesis, point);
      case BranchNode::Kind::Split: {
        if (j.side.branch == "positive") return inst(node.pivot, point);
        Assignment bound = point;
        for (const auto& [name, expr] : j.side.at) bound[name] = expr.evaluate(point);
        return inst(node.pivot, bound);
      }
      default: {
        Assignment at = point;
        if (j.side.branch == "lower") at[node.index] = point.at(node.index) - 1;
        return inst(node.family, at, node.index);
      }
    }
  }

  void check_judgment(std::size_t position) {
    const Judgment& j = cert_.judgments[position];
    if (failed_.count(j.id) != 0) return;
    ++report_.judgments_checked;
    try {
      if (reached_.count(j.scope) == 0) throw CheckError("scope " + j.scope + " is not a branch node");
      for (const auto& g : j.word.generators()) {
        if (g != "m" && g != "l" && g != "t") throw CheckError("generator " + g + " is not one of m, l, t");
      }
      GridSpec grid;
      std::set<std::string> free = j.word.parameters();
      std::vector<const Judgment*> premises;
      for (const auto& pr : j.premises) {
        premises.push_back(premise_judgment(j, pr.id));
        auto names = premises.back()->word.parameters();
        if (pr.power) pr.power->collect_parameters(free);
        if (pr.range) {
          if (declared(pr.range->index).role != ParameterRole::Universal) {
            throw CheckError("range index " + pr.range->index + " must be a universal parameter");
          }
          if (pr.range->step == 0) throw CheckError("range step must be non-zero");
          names.erase(pr.range->index);
          pr.range->from.collect_parameters(free);
          pr.range->to.collect_parameters(free);
        }
        free.insert(names.begin(), names.end());
      }
      for (const auto& pr : j.premises) {
        if (pr.range && free.count(pr.range->index) != 0) {
          throw CheckError("range index " + pr.range->index + " also occurs free");
        }
      }

      std::optional<HypTarget> hyp;
      switch (j.rule) {
        case Rule::Hyp: {
          hyp = hyp_target(j);
          const BranchNode& node = *hyp->node;
          if (node.kind == BranchNode::Kind::Root) {
            // no free names
          } else if (node.kind == BranchNode::Kind::Split) {
            auto names = node.pivot.parameters();
            if (j.side.branch == "negative") {
              names.erase(node.parameter);
              for (const auto& kv : j.side.at) kv.second.collect_parameters(free);
            }
            free.insert(names.begin(), names.end());
          } else {
            auto names = node.family.parameters();
            free.insert(names.begin(), names.end());
          }
          if (hyp->sign != j.sign) throw CheckError("HYP sign must match the cited hypothesis");
          break;
        }
        case Rule::Decay:
        case Rule::Inv:
        case Rule::Eq:
          require_plain_premises(j, 1);
          if (!j.side.empty()) throw CheckError(to_string(j.rule) + " takes no side data");
          break;
        case Rule::PowerRoot:
          require_plain_premises(j, 1);
          if (!j.side.node.empty() || !j.side.branch.empty() || !j.side.at.empty() || !j.side.power) {
            throw CheckError("POWER_ROOT takes exactly a power as side data");
          }
          j.side.power->collect_parameters(free);
          break;
        case Rule::Prod:
          if (j.premises.empty()) throw CheckError("PROD needs at least one premise");
          if (!j.side.empty()) throw CheckError("PROD takes no side data");
          break;
      }
      if (j.rule != Rule::Inv) {
        for (const auto* p : premises) {
          if (p->sign != j.sign) throw CheckError("premise " + p->id + " has the opposite sign");
        }
      } else if (premises[0]->sign == j.sign) {
        throw CheckError("INV must flip the sign");
      }

      for (const auto& name : free) resolve(name, j.scope, grid);
      run_grid(j.id, grid, [&](const Assignment& point) { return check_at(j, premises, hyp, point); });
    } catch (const std::exception& e) {
      fail(j.id, {}, e.what());
    }
  }

  static bool peripheral(const Word& w, Int& a, Int& b) {
    const auto& s = w.syllables();
    if (s.size() != 2 || s[0].generator != "m" || s[1].generator != "l") return false;
    a = s[0].exponent;
    b = s[1].exponent;
    return true;
  }

  std::optional<std::string> check_at(const Judgment& j, const std::vector<const Judgment*>& premises,
                                      const std::optional<HypTarget>& hyp, const Assignment& point) const {
    const Word w = inst(j.word, point);
    switch (j.rule) {
      case Rule::Hyp: {
        const Word target = hyp_word(j, *hyp, point);
        if (w != target) return "word " + w.to_string() + " is not the hypothesis " + target.to_string();
        return std::nullopt;
      }
      case Rule::Decay: {
        const Word pw = inst(premises[0]->word, point);
        Int a1, b1, a2, b2;
        if (!peripheral(pw, a1, b1) || !peripheral(w, a2, b2)) {
          return "DECAY needs words of the form m^a l^b, got " + pw.to_string() + " and " + w.to_string();
        }
        for (auto [a, b] : {std::pair{a1, b1}, std::pair{a2, b2}}) {
          if (b < 1) return "DECAY needs a positive l exponent, got m^" + std::to_string(a) + " l^" + std::to_string(b);
          if (Rational(a, b) < cert_.r) {
            return "slope " + Rational(a, b).to_string() + " is below the decay bound " + cert_.r.to_string();
          }
        }
        return std::nullopt;
      }
      case Rule::Prod: {
        Word product;
        Int factors = 0;
        for (std::size_t i = 0; i < premises.size(); ++i) {
          const PremiseRef& pr = j.premises[i];
          if (pr.range) {
            const Int from = pr.range->from.evaluate(point);
            const Int to = pr.range->to.evaluate(point);
            const Int step = pr.range->step;
            if ((to - from) / step + 1 > kRangeTermLimit) return std::string("index range is too long");
            Assignment at = point;
            for (Int x = from; step > 0 ? x <= to : x >= to; x += step) {
              at[pr.range->index] = x;
              product.append(inst(premises[i]->word, at));
              ++factors;
            }
          } else {
            const Int c = pr.power ? pr.power->evaluate(point) : 1;
            if (c < 0) return "premise " + pr.id + " raised to the negative power " + std::to_string(c);
            product.append(inst(premises[i]->word, point).power(c));
            if (c > 0) ++factors;
          }
        }
        if (factors == 0) return std::string("PROD has no factor with a positive power");
        if (product != w) return "product " + product.to_string() + " differs from " + w.to_string();
        return std::nullopt;
      }
      case Rule::PowerRoot: {
        const Int c = j.side.power->evaluate(point);
        if (c < 1) return "POWER_ROOT needs a power >= 1, got " + std::to_string(c);
        const Word pw = inst(premises[0]->word, point);
        if (pw != w.power(c)) return "premise " + pw.to_string() + " is not (" + w.to_string() + ")^" + std::to_string(c);
        return std::nullopt;
      }
      case Rule::Inv: {
        const Word pw = inst(premises[0]->word, point);
        if (pw != w.inverse()) return "premise " + pw.to_string() + " is not the inverse of " + w.to_string();
        return std::nullopt;
      }
      case Rule::Eq: {
        const Word pw = inst(premises[0]->word, point);
        if (gpq_->equal(pw, w) != Equality::Equal) {
          return pw.to_string() + " and " + w.to_string() + " differ in G_{p,q}";
        }
        return std::nullopt;
      }
    }
    return std::string("unknown rule");
  }

  // ---- branch nodes ----

  const Judgment& cited(const BranchNode& node, const std::string& id, Sign sign) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw CheckError("cited judgment '" + id + "' does not exist");
    const Judgment& j = cert_.judgments[it->second];
    if (!is_ancestor_or_self(j.scope, node.id)) {
      throw CheckError("cited judgment " + id + " is scoped outside " + node.id);
    }
    if (j.sign != sign) throw CheckError("cited judgment " + id + " has the wrong sign");
    return j;
  }

  void check_node(const BranchNode& node) {
    try {
      switch (node.kind) {
        case BranchNode::Kind::Root: {
          if (!node.hypothesis.parameters().empty()) throw CheckError("root hypothesis must be a concrete word");
          const Word h = inst(node.hypothesis, {});
          const Word expected = meridian_.power(cert_.p * cert_.q) * longitude_;
          if (gpq_->equal(h, expected) != Equality::Equal) {
            throw CheckError("root hypothesis " + h.to_string() + " is not mu_C^pq lambda_C in G_{p,q}");
          }
          break;
        }
        case BranchNode::Kind::Split: {
          GridSpec grid;
          for (const auto& name : node.pivot.parameters()) {
            if (name != node.parameter) throw CheckError("pivot may only depend on the split parameter");
          }
          if (!node.parameter.empty()) {
            const Parameter& param = declared(node.parameter);
            if (param.role != ParameterRole::Witness) {
              throw CheckError("split parameter " + node.parameter + " must be declared as a witness");
            }
            grid.axes.push_back({param.name, {param.min, param.min + bound_}});
          }
          run_grid(node.id, grid, [&](const Assignment& point) -> std::optional<std::string> {
            if (gpq_->is_identity(inst(node.pivot, point)) != Equality::NotEqual) {
              return std::string("pivot is trivial in G_{p,q}");
            }
            return std::nullopt;
          });
          break;
        }
        case BranchNode::Kind::SignChange:
          check_sign_change(node);
          break;
        case BranchNode::Kind::Leaf:
          check_leaf(node);
          break;
      }
    } catch (const std::exception& e) {
      fail(node.id, {}, e.what());
    }
  }

  void check_sign_change(const BranchNode& node) {
    const Parameter& index = declared(node.index);
    if (index.role != ParameterRole::Witness) {
      throw CheckError("sign-change index " + node.index + " must be declared as a witness");
    }
    const auto [lo, hi] = sign_change_range(node);
    if (lo > hi) throw CheckError("sign-change range is empty");
    if (lo == hi && !node.child.empty()) throw CheckError("a closed sign change (lo == hi) takes no child");
    if (lo < hi && node.child.empty()) throw CheckError("non-exhaustive: sign change with lo < hi needs a child");
    if (lo < hi && lo + 1 < index.min) throw CheckError("sign-change range starts below the index domain");
    if (lo < hi) report_.index_ranges.push_back({node.id, node.index, lo + 1, hi, hi <= cert_.q - 1});

    GridSpec grid;
    for (const auto& name : node.family.parameters()) {
      if (name != node.index) resolve(name, node.id, grid);
    }
    run_grid(node.id, grid, [&](const Assignment& point) -> std::optional<std::string> {
      Assignment at = point;
      for (Int n = lo; n <= hi; ++n) {
        at[node.index] = n;
        if (gpq_->is_identity(inst(node.family, at, node.index)) != Equality::NotEqual) {
          return "family is trivial at " + node.index + "=" + std::to_string(n);
        }
      }
      return std::nullopt;
    });

    for (auto [id, sign, value] : {std::tuple{node.below, Sign::Negative, lo}, std::tuple{node.above, Sign::Positive, hi}}) {
      const Judgment& j = cited(node, id, sign);
      GridSpec jgrid;
      for (const auto& name : j.word.parameters()) resolve(name, node.id, jgrid);
      const Int n = value;
      run_grid(node.id, jgrid, [&](const Assignment& point) -> std::optional<std::string> {
        Assignment at = point;
        at[node.index] = n;
        const Word expected = inst(node.family, at, node.index);
        const Word got = inst(j.word, point);
        if (got != expected) {
          return "judgment " + id + " is " + got.to_string() + ", expected the family at " + node.index + "=" +
                 std::to_string(n) + ": " + expected.to_string();
        }
        return std::nullopt;
      });
    }
  }

  void check_leaf(const BranchNode& node) {
    const Judgment& j = cited(node, node.conclusion, Sign::Positive);
    const Parameter& index = declared(node.leaf_index);
    if (index.role != ParameterRole::Universal) {
      throw CheckError("leaf index " + node.leaf_index + " must be a universal parameter");
    }
    std::set<std::string> names = j.word.parameters();
    names.insert(node.leaf_index);
    node.formula.a.collect_parameters(names);
    node.formula.b.collect_parameters(names);
    node.formula.d.collect_parameters(names);
    GridSpec grid;
    for (const auto& name : names) resolve(name, node.id, grid);

    LeafResult result;
    result.leaf = node.id;
    result.formula = "(" + scaled(node.formula.a, node.leaf_index) + " + " + node.formula.b.to_string() + ")/" +
                     grouped(node.formula.d);
    const Int pq = cert_.p * cert_.q;
    const bool ok = run_grid(node.id, grid, [&](const Assignment& point) -> std::optional<std::string> {
      const Int a = node.formula.a.evaluate(point);
      const Int b = node.formula.b.evaluate(point);
      const Int d = node.formula.d.evaluate(point);
      if (a <= 0) return std::string("sequence step A must be positive");
      if (d <= 0) return std::string("longitude exponent D must be positive");
      if (b != pq * d) return std::string("sequence must start at pq: B must equal pq * D");
      const Int e = a * point.at(node.leaf_index) + b;
      const Word expected = meridian_.power(e) * longitude_.power(d);
      const Word got = inst(j.word, point);
      if (got != expected) {
        return "conclusion " + got.to_string() + " is not mu_C^" + std::to_string(e) + " lambda_C^" +
               std::to_string(d) + " = " + expected.to_string();
      }
      result.instances.push_back({point, e, d, Rational(e, d), gcd(e, d)});
      return std::nullopt;
    });
    if (ok) report_.leaves.push_back(std::move(result));
  }

  // Every judgment must feed a leaf conclusion or a sign-change citation.
  void check_usage() {
    std::vector<std::string> stack;
    for (const auto& node : cert_.branches) {
      if (node.kind == BranchNode::Kind::Leaf) stack.push_back(node.conclusion);
      if (node.kind == BranchNode::Kind::SignChange) {
        stack.push_back(node.below);
        stack.push_back(node.above);
      }
    }
    std::set<std::string> used;
    while (!stack.empty()) {
      const std::string id = stack.back();
      stack.pop_back();
      auto it = index_.find(id);
      if (it == index_.end() || !used.insert(id).second) continue;
      for (const auto& pr : cert_.judgments[it->second].premises) stack.push_back(pr.id);
    }
    for (const auto& j : cert_.judgments) {
      if (used.count(j.id) == 0) fail(j.id, {}, "unused judgment");
    }
  }

  const DecayCertificate& cert_;
  Int bound_;
  VerificationReport report_;
  std::set<std::string> failed_;
  std::shared_ptr<const CentralAmalgamBackend> gpq_;
  Word meridian_;
  Word longitude_;
  std::map<std::string, const Parameter*> plain_;
  std::vector<const Parameter*> derived_;
  ParameterDomains domains_;
  std::map<std::string, const BranchNode*> nodes_;
  std::map<std::string, std::string> parent_;
  std::set<std::string> reached_;
  std::string root_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

VerificationReport verify_derivation(const DecayCertificate& cert, Int grid_bound) {
  return Kernel(cert, grid_bound).run();
}

json VerificationReport::to_json() const {
  json leaves_json = json::array();
  for (const auto& leaf : leaves) {
    json instances = json::array();
    for (const auto& inst : leaf.instances) {
      instances.push_back({{"point", point_json(inst.point)},
                           {"meridian_exponent", inst.meridian_exponent},
                           {"longitude_exponent", inst.longitude_exponent},
                           {"r_i", inst.slope.to_string()},
                           {"weight", inst.weight}});
    }
    leaves_json.push_back({{"leaf", leaf.leaf}, {"formula", leaf.formula}, {"instances", instances}});
  }
  json failures_json = json::array();
  for (const auto& f : failures) {
    failures_json.push_back({{"judgment", f.judgment}, {"grid_point", point_json(f.point)}, {"reason", f.reason}});
  }
  json ranges = json::array();
  for (const auto& r : index_ranges) {
    ranges.push_back({{"node", r.node}, {"index", r.index}, {"lo", r.lo}, {"hi", r.hi},
                      {"within_q_bound", r.within_q_bound}});
  }
  return json{{"verdict", verdict()},
              {"p", p},
              {"q", q},
              {"r", r.to_string()},
              {"grid_bound", grid_bound},
              {"grid_limited", grid_limited},
              {"judgments_checked", judgments_checked},
              {"instances_checked", instances_checked},
              {"leaves", leaves_json},
              {"failures", failures_json},
              {"index_ranges", ranges}};
}

json DecayConclusion::to_json() const {
  return json{{"p", p},
              {"q", q},
              {"companion_decay", companion_decay.to_string()},
              {"decay", decay.to_string()},
              {"statement", statement},
              {"notes", notes},
              {"grid_limited", grid_limited},
              {"grid_bound", grid_bound}};
}

DecayConclusion conclude_decay(const VerificationReport& report) {
  if (!report.accepted) {
    throw std::invalid_argument("cannot conclude decay from a rejected certificate (" +
                                (report.failures.empty() ? std::string("no leaves") : report.failures.front().reason) +
                                ")");
  }
  if (report.leaves.empty()) throw std::invalid_argument("cannot conclude decay without leaves");
  DecayConclusion out;
  out.p = report.p;
  out.q = report.q;
  out.companion_decay = report.r;
  out.decay = Rational(report.p * report.q);
  out.statement = "cable(" + std::to_string(report.p) + "," + std::to_string(report.q) + ") of a " +
                  report.r.to_string() + "-decayed companion is " + out.decay.to_string() + "-decayed";
  out.notes = {
      "every branch yields slopes r_i = (A i + B)/D > pq with mu_C^(A i + B) lambda_C^D > 1",
      "the mirror statement for negative slopes follows by reversing the order",
      "weights gcd(A i + B, D) > 1 are discharged by POWER_ROOT (unique roots in a left order)",
      "grid-limited: universal parameters checked for values up to min + " + std::to_string(report.grid_bound),
  };
  out.grid_limited = report.grid_limited;
  out.grid_bound = report.grid_bound;
  return out;
}

}  // namespace decaykit
