#include "decaykit/search/cone_search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace decaykit {

using nlohmann::json;

namespace {

constexpr std::size_t kBallWordLimit = 200000;

std::vector<Word> ball_words(const Presentation& presentation, int radius) {
  std::vector<Syllable> letters;
  for (const auto& g : presentation.generators()) {
    letters.push_back({g, 1});
    letters.push_back({g, -1});
  }
  std::vector<Word> all{Word{}};
  std::vector<std::vector<Syllable>> frontier{{}};
  for (int length = 1; length <= radius; ++length) {
    std::vector<std::vector<Syllable>> next;
    for (const auto& letters_so_far : frontier) {
      for (const auto& letter : letters) {
        if (!letters_so_far.empty() && letters_so_far.back().generator == letter.generator &&
            letters_so_far.back().exponent == -letter.exponent) {
          continue;
        }
        auto extended = letters_so_far;
        extended.push_back(letter);
        Word w;
        for (const auto& s : extended) w.append(s);
        all.push_back(std::move(w));
        next.push_back(std::move(extended));
        if (all.size() > kBallWordLimit) throw std::invalid_argument("search radius too large for this presentation");
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), shortlex_less);
  return all;
}

}  // namespace

std::optional<std::size_t> ConeSearchInstance::find(const Word& representative) const {
  auto it = std::find(elements.begin(), elements.end(), representative);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

ConeSearchInstance enumerate_ball(const Presentation& presentation, int radius, const WordProblem& backend) {
  if (radius < 1) throw std::invalid_argument("search radius must be positive");
  ConeSearchInstance inst;
  inst.conclusive = backend.is_exact();
  const std::vector<Word> words = ball_words(presentation, radius);

  std::map<Word, std::size_t> word_class;
  std::map<Word, std::size_t> canonical_class;  // exact backends only
  const std::size_t none = static_cast<std::size_t>(-1);
  for (const auto& w : words) {
    if (backend.is_exact()) {
      const Word key = *backend.canonical(w);
      if (key.empty()) {
        word_class[w] = none;
        continue;
      }
      auto [it, inserted] = canonical_class.emplace(key, inst.elements.size());
      if (inserted) inst.elements.push_back(w);
      word_class[w] = it->second;
      continue;
    }
    const Equality trivial = backend.is_identity(w);
    if (trivial == Equality::Equal) {
      word_class[w] = none;
      continue;
    }
    if (trivial == Equality::Unknown) inst.conclusive = false;
    std::size_t cls = none;
    for (std::size_t e = 0; e < inst.elements.size() && cls == none; ++e) {
      const Equality same = backend.equal(w, inst.elements[e]);
      if (same == Equality::Equal) cls = e;
      if (same == Equality::Unknown) inst.conclusive = false;
    }
    if (cls == none) {
      cls = inst.elements.size();
      inst.elements.push_back(w);
    }
    word_class[w] = cls;
  }

  // Prefer the backend's canonical word when it is spelled in the same
  // generators; then order elements shortlex.
  std::vector<Word> shortest = inst.elements;
  if (backend.is_exact()) {
    for (auto& rep : inst.elements) {
      Word c = *backend.canonical(rep);
      bool same_alphabet = true;
      for (const auto& s : c.syllables()) same_alphabet = same_alphabet && presentation.has_generator(s.generator);
      if (same_alphabet) rep = std::move(c);
    }
  }
  std::vector<std::size_t> order(inst.elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return shortlex_less(inst.elements[a], inst.elements[b]); });
  std::vector<std::size_t> position(order.size());
  std::vector<Word> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    sorted.push_back(inst.elements[order[i]]);
  }
  inst.elements = std::move(sorted);
  for (auto& [w, cls] : word_class) {
    if (cls != none) cls = position[cls];
  }
  for (auto& [key, cls] : canonical_class) cls = position[cls];
  for (std::size_t i = 0; i < order.size(); ++i) {
    inst.inverse.push_back(word_class.at(shortest[order[i]].inverse()));
  }

  for (std::size_t i = 0; i < inst.elements.size(); ++i) {
    for (std::size_t j = 0; j < inst.elements.size(); ++j) {
      const Word product = inst.elements[i] * inst.elements[j];
      std::size_t k = none;
      if (auto it = word_class.find(product); it != word_class.end()) {
        k = it->second;
      } else if (backend.is_exact()) {
        auto c = canonical_class.find(*backend.canonical(product));
        if (c != canonical_class.end()) k = c->second;
      }
      if (k != none) inst.products.push_back({i, j, k});
    }
  }
  return inst;
}

std::optional<TorsionWitness> torsion_scan(const ConeSearchInstance& inst, const WordProblem& backend,
                                           Int max_power) {
  for (std::size_t e = 0; e < inst.elements.size(); ++e) {
    for (Int d = 2; d <= max_power; ++d) {
      if (backend.is_identity(inst.elements[e].power(d)) == Equality::Equal) return TorsionWitness{e, d};
    }
  }
  return std::nullopt;
}

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Assignment:
      return "ASSIGNMENT";
    case SearchOutcome::Contradiction:
      return "CONTRADICTION";
    case SearchOutcome::NoObstruction:
      return "NO_OBSTRUCTION";
  }
  return "?";
}

namespace {

struct BudgetExhausted {};

class Solver {
 public:
  Solver(const ConeSearchInstance& inst, std::size_t budget)
      : inst_(inst), budget_(budget), watch_(inst.elements.size()) {
    for (std::size_t t = 0; t < inst.products.size(); ++t) {
      const auto& tr = inst.products[t];
      watch_[tr.left].push_back(t);
      if (tr.right != tr.left) watch_[tr.right].push_back(t);
      if (tr.result != tr.left && tr.result != tr.right) watch_[tr.result].push_back(t);
    }
  }

  SearchResult run() {
    SearchResult result;
    std::vector<int> values(inst_.elements.size(), 0);
    refutation_.nodes.emplace_back();
    try {
      if (solve(0, values, {})) {
        result.outcome = SearchOutcome::Assignment;
        for (int v : solution_) result.signs.push_back(v > 0);
        result.note = "consistent signs on this window; not a proof of left-orderability";
      } else if (inst_.conclusive) {
        result.outcome = SearchOutcome::Contradiction;
        result.refutation = std::move(refutation_);
        result.note = "no positive cone restricts to this window: the group is not left-orderable";
      } else {
        result.outcome = SearchOutcome::NoObstruction;
        result.refutation = std::move(refutation_);
        result.note = "contradiction on a window whose elements are not all proved distinct and nontrivial";
      }
    } catch (const BudgetExhausted&) {
      result.outcome = SearchOutcome::NoObstruction;
      result.note = "search budget exhausted";
    }
    result.decisions = decisions_;
    return result;
  }

 private:
  // Assigns and propagates; records the steps in `node`. False on conflict.
  bool propagate(std::size_t node, std::vector<int>& values, std::vector<std::size_t> queue) {
    auto set = [&](TraceStep step) {
      values[step.element] = step.positive ? 1 : -1;
      refutation_.nodes[node].steps.push_back(step);
      queue.push_back(step.element);
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t e = queue[head];
      const std::size_t inv = inst_.inverse[e];
      if (values[inv] == values[e]) {
        refutation_.nodes[node].conflict = Conflict{true, e, {0, 0, 0}};
        return false;
      }
      if (values[inv] == 0) {
        TraceStep step;
        step.reason = TraceStep::Reason::Inverse;
        step.element = inv;
        step.positive = values[e] < 0;
        step.inverse_of = e;
        set(step);
      }
      for (std::size_t t : watch_[e]) {
        const auto& tr = inst_.products[t];
        const int l = values[tr.left], r = values[tr.right], k = values[tr.result];
        TraceStep step;
        step.reason = TraceStep::Reason::Product;
        step.triple = tr;
        if (l > 0 && r > 0 && k < 0) {
          refutation_.nodes[node].conflict = Conflict{false, 0, tr};
          return false;
        }
        if (l > 0 && r > 0 && k == 0) {
          step.element = tr.result;
          step.positive = true;
          set(step);
        } else if (l > 0 && k < 0 && r == 0) {
          step.element = tr.right;
          step.positive = false;
          set(step);
        } else if (r > 0 && k < 0 && l == 0) {
          step.element = tr.left;
          step.positive = false;
          set(step);
        }
      }
    }
    return true;
  }

  bool solve(std::size_t node, std::vector<int>& values, std::vector<std::size_t> queue) {
    if (!propagate(node, values, std::move(queue))) return false;
    auto free = std::find(values.begin(), values.end(), 0);
    if (free == values.end()) {
      solution_ = values;
      return true;
    }
    if (++decisions_ > budget_) throw BudgetExhausted{};
    const auto e = static_cast<std::size_t>(free - values.begin());
    refutation_.nodes[node].split_element = e;
    for (bool positive : {true, false}) {
      const std::size_t child = refutation_.nodes.size();
      refutation_.nodes.emplace_back();
      if (positive) {
        refutation_.nodes[node].positive_child = child;
      } else {
        refutation_.nodes[node].negative_child = child;
      }
      std::vector<int> branch = values;
      branch[e] = positive ? 1 : -1;
      TraceStep decision;
      decision.element = e;
      decision.positive = positive;
      refutation_.nodes[child].steps.push_back(decision);
      if (solve(child, branch, {e})) return true;
    }
    return false;
  }

  const ConeSearchInstance& inst_;
  std::size_t budget_;
  std::vector<std::vector<std::size_t>> watch_;
  Refutation refutation_;
  std::vector<int> solution_;
  std::size_t decisions_ = 0;
};

std::string name_of(const ConeSearchInstance& inst, std::size_t e) { return inst.elements.at(e).to_string(); }

}  // namespace

SearchResult cone_search(const ConeSearchInstance& inst, std::size_t budget) { return Solver(inst, budget).run(); }

std::string check_assignment(const ConeSearchInstance& inst, const std::vector<bool>& signs) {
  if (signs.size() != inst.elements.size()) return "assignment does not cover the window";
  for (std::size_t e = 0; e < signs.size(); ++e) {
    if (signs[e] == signs[inst.inverse[e]]) return "element " + name_of(inst, e) + " and its inverse share a sign";
  }
  for (const auto& tr : inst.products) {
    if (signs[tr.left] && signs[tr.right] && !signs[tr.result]) {
      return "product " + name_of(inst, tr.left) + " * " + name_of(inst, tr.right) + " of positives is negative";
    }
  }
  return "";
}

namespace {

class Replay {
 public:
  Replay(const ConeSearchInstance& inst, const Refutation& refutation, const WordProblem& backend)
      : inst_(inst), ref_(refutation), backend_(backend) {
    for (const auto& tr : inst.products) products_.insert({tr.left, tr.right, tr.result});
  }

  std::string run() {
    if (ref_.nodes.empty()) return "empty refutation";
    std::vector<int> values(inst_.elements.size(), 0);
    try {
      visit(0, values, std::nullopt);
    } catch (const std::runtime_error& e) {
      return e.what();
    }
    return "";
  }

 private:
  [[noreturn]] static void reject(const std::string& why) { throw std::runtime_error(why); }

  void check_element(std::size_t e) {
    if (e >= inst_.elements.size()) reject("element index out of range");
    if (!nontrivial_.insert(e).second) return;
    if (backend_.is_identity(inst_.elements[e]) != Equality::NotEqual) {
      reject("element " + name_of(inst_, e) + " is not proved nontrivial");
    }
  }

  void check_inverse(std::size_t e) {
    check_element(e);
    check_element(inst_.inverse[e]);
    if (backend_.is_identity(inst_.elements[e] * inst_.elements[inst_.inverse[e]]) != Equality::Equal) {
      reject("cited inverse pair of " + name_of(inst_, e) + " does not multiply to 1");
    }
  }

  void check_triple(const ProductTriple& tr) {
    if (products_.count({tr.left, tr.right, tr.result}) == 0) reject("cited product triple is not in the window");
    check_element(tr.left);
    check_element(tr.right);
    check_element(tr.result);
    if (backend_.equal(inst_.elements[tr.left] * inst_.elements[tr.right], inst_.elements[tr.result]) !=
        Equality::Equal) {
      reject("cited product " + name_of(inst_, tr.left) + " * " + name_of(inst_, tr.right) + " = " +
             name_of(inst_, tr.result) + " is not proved");
    }
  }

  void visit(std::size_t index, std::vector<int>& values, std::optional<std::pair<std::size_t, bool>> decision) {
    if (index >= ref_.nodes.size() || !seen_.insert(index).second) reject("refutation is not a tree");
    const RefutationNode& node = ref_.nodes[index];
    for (std::size_t s = 0; s < node.steps.size(); ++s) {
      const TraceStep& step = node.steps[s];
      check_element(step.element);
      if (values[step.element] != 0) reject("step assigns " + name_of(inst_, step.element) + " twice");
      const int sign = step.positive ? 1 : -1;
      switch (step.reason) {
        case TraceStep::Reason::Decision:
          if (s != 0 || !decision || decision->first != step.element || decision->second != step.positive) {
            reject("unexpected case split on " + name_of(inst_, step.element));
          }
          break;
        case TraceStep::Reason::Inverse:
          if (step.inverse_of >= values.size() || inst_.inverse[step.inverse_of] != step.element) {
            reject("inverse step cites the wrong pair");
          }
          check_inverse(step.inverse_of);
          if (values[step.inverse_of] != -sign) reject("inverse step does not follow");
          break;
        case TraceStep::Reason::Product: {
          const auto& tr = step.triple;
          check_triple(tr);
          const int l = values[tr.left], r = values[tr.right], k = values[tr.result];
          const bool ok = (step.element == tr.result && step.positive && l > 0 && r > 0) ||
                          (step.element == tr.right && !step.positive && l > 0 && k < 0) ||
                          (step.element == tr.left && !step.positive && r > 0 && k < 0);
          if (!ok) reject("product step on " + name_of(inst_, step.element) + " does not follow");
          break;
        }
      }
      values[step.element] = sign;
    }
    if (index != 0 && (node.steps.empty() || node.steps.front().reason != TraceStep::Reason::Decision)) {
      reject("branch does not start with its case split");
    }
    if (node.conflict) {
      const Conflict& c = *node.conflict;
      if (c.from_inverse) {
        check_inverse(c.element);
        if (values[c.element] == 0 || values[c.element] != values[inst_.inverse[c.element]]) {
          reject("claimed inverse conflict at " + name_of(inst_, c.element) + " does not hold");
        }
      } else {
        check_triple(c.triple);
        if (!(values[c.triple.left] > 0 && values[c.triple.right] > 0 && values[c.triple.result] < 0)) {
          reject("claimed product conflict does not hold");
        }
      }
      return;
    }
    const std::size_t e = node.split_element;
    check_element(e);
    if (values[e] != 0) reject("split on an assigned element");
    std::vector<int> pos = values, neg = values;
    visit(node.positive_child, pos, std::pair{e, true});
    visit(node.negative_child, neg, std::pair{e, false});
  }

  const ConeSearchInstance& inst_;
  const Refutation& ref_;
  const WordProblem& backend_;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> products_;
  std::set<std::size_t> seen_;
  std::set<std::size_t> nontrivial_;
};

json step_json(const ConeSearchInstance& inst, const TraceStep& step) {
  json j{{"element", name_of(inst, step.element)}, {"sign", step.positive ? "+" : "-"}};
  switch (step.reason) {
    case TraceStep::Reason::Decision:
      j["reason"] = "split";
      break;
    case TraceStep::Reason::Inverse:
      j["reason"] = "inverse";
      j["cites"] = {name_of(inst, step.inverse_of)};
      break;
    case TraceStep::Reason::Product:
      j["reason"] = "product";
      j["cites"] = {name_of(inst, step.triple.left), name_of(inst, step.triple.right),
                    name_of(inst, step.triple.result)};
      break;
  }
  return j;
}

}  // namespace

std::string check_refutation(const ConeSearchInstance& inst, const Refutation& refutation,
                             const WordProblem& backend) {
  return Replay(inst, refutation, backend).run();
}

json to_json(const ConeSearchInstance& inst, const Refutation& refutation) {
  json nodes = json::array();
  for (const auto& node : refutation.nodes) {
    json steps = json::array();
    for (const auto& s : node.steps) steps.push_back(step_json(inst, s));
    json n{{"steps", steps}};
    if (node.conflict) {
      const Conflict& c = *node.conflict;
      if (c.from_inverse) {
        n["conflict"] = {{"kind", "inverse"}, {"cites", {name_of(inst, c.element), name_of(inst, inst.inverse[c.element])}}};
      } else {
        n["conflict"] = {{"kind", "product"},
                         {"cites", {name_of(inst, c.triple.left), name_of(inst, c.triple.right),
                                    name_of(inst, c.triple.result)}}};
      }
    } else {
      n["split"] = name_of(inst, node.split_element);
      n["positive"] = node.positive_child;
      n["negative"] = node.negative_child;
    }
    nodes.push_back(std::move(n));
  }
  return nodes;
}

}  // namespace decaykit
