#pragma once

// Data model of decay certificates.
//
// A certificate is a tree of sign hypotheses about elements of the cable
// peripheral group G_{p,q} (over the generators m, l, t) together with a
// list of positivity judgments. Each leaf of the tree names a judgment
// showing that mu_C^(A i + B) lambda_C^D > 1 for every i >= 1, with
// B / D = pq, i.e. a strictly increasing unbounded sequence of slopes
// r_i = (A i + B) / D starting at pq.
//
// Tree nodes:
//   root         hypothesis word (positive), one child
//   split        pivot word, optional parameter; "positive" child assumes
//                pivot > 1 (for some value of the parameter), "negative"
//                child assumes pivot < 1 (for every value)
//   sign-change  family word in an index parameter with range [lo, hi];
//                cites a judgment family(lo) < 1 and one family(hi) > 1,
//                and its child assumes family(n) > 1 and family(n-1) < 1
//                for some lo < n <= hi. With lo == hi the cited judgments
//                contradict each other and the node has no child.
//   leaf         conclusion judgment and its sequence formula (A, B, D)
//
// Judgment rules:
//   HYP         a hypothesis of an enclosing node, literally
//   DECAY       one premise; both words are m^a l^b with b >= 1, a/b >= r
//   PROD        premises (with powers or index ranges) multiply literally
//   POWER_ROOT  premise word is the conclusion word to a power c >= 1
//   INV         premise word is the literal inverse; sign flips
//   EQ          premise and conclusion are equal in G_{p,q}

#include "decaykit/slope/rational.hpp"
#include "decaykit/words/affine.hpp"
#include "decaykit/words/parametric_word.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace decaykit {

enum class Sign { Positive, Negative };
enum class Rule { Hyp, Decay, Prod, PowerRoot, Inv, Eq };

std::string to_string(Sign s);
std::string to_string(Rule r);
Sign parse_sign(const std::string& text);
Rule parse_rule(const std::string& text);

enum class ParameterRole { Universal, Witness, Derived };

std::string to_string(ParameterRole r);

/// A declared parameter. Derived parameters are the least integer >= min
/// with numerator / denominator > r and denominator > 0; they are only
/// visible in judgments under `scope`.
struct Parameter {
  std::string name;
  ParameterRole role = ParameterRole::Universal;
  Int min = 0;
  std::string scope;  // derived parameters only
  AffineExpr numerator;
  AffineExpr denominator;
};

struct IndexRange {
  std::string index;
  AffineExpr from;
  AffineExpr to;
  Int step = 1;
};

struct PremiseRef {
  std::string id;
  std::optional<AffineExpr> power;  // PROD only
  std::optional<IndexRange> range;  // PROD only
};

/// Side data of HYP (node/branch/at) and POWER_ROOT (power).
struct Side {
  std::string node;
  std::string branch;  // positive | negative | upper | lower | "" (root)
  std::map<std::string, AffineExpr> at;
  std::optional<AffineExpr> power;
  bool empty() const { return node.empty() && branch.empty() && at.empty() && !power; }
};

struct Judgment {
  std::string id;
  std::string scope;
  ParametricWord word;
  Sign sign = Sign::Positive;
  Rule rule = Rule::Hyp;
  std::vector<PremiseRef> premises;
  Side side;
};

struct SequenceFormula {
  AffineExpr a;
  AffineExpr b;
  AffineExpr d;
};

struct BranchNode {
  enum class Kind { Root, Split, SignChange, Leaf };
  std::string id;
  Kind kind = Kind::Leaf;
  // root
  ParametricWord hypothesis;
  std::string child;  // root and sign-change ("" = closed)
  // split
  ParametricWord pivot;
  std::string parameter;  // "" for a plain sign split
  std::string positive;
  std::string negative;
  // sign-change
  ParametricWord family;
  std::string index;
  AffineExpr lo;
  AffineExpr hi;
  std::string below;
  std::string above;
  // leaf
  std::string conclusion;
  std::string leaf_index;
  SequenceFormula formula;
};

std::string to_string(BranchNode::Kind k);

struct DecayCertificate {
  Int p = 0;
  Int q = 0;
  Rational r;
  Int u = 0;
  Int v = 0;
  std::vector<Parameter> parameters;
  std::vector<BranchNode> branches;
  std::vector<Judgment> judgments;
};

/// Strict parsing: unknown fields and malformed words are rejected with
/// std::invalid_argument.
DecayCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DecayCertificate& cert);

}  // namespace decaykit
