#include "decaykit/certificate/builtin.hpp"

#include "decaykit/cable/cable.hpp"

#include <stdexcept>

namespace decaykit {

namespace {

AffineExpr var(const char* name, Int coefficient = 1) { return AffineExpr::parameter(name, coefficient); }

ParametricWord g(const char* generator, AffineExpr exponent) {
  return ParametricWord::syllable(generator, std::move(exponent));
}

ParametricWord blk(const ParametricWord& body, AffineExpr exponent) {
  return ParametricWord::block(body, std::move(exponent));
}

class Builder {
 public:
  explicit Builder(DecayCertificate& cert) : cert_(cert) {}

  Judgment& add(std::string id, std::string scope, const ParametricWord& word, Sign sign, Rule rule,
                std::vector<PremiseRef> premises = {}) {
    Judgment j;
    j.id = std::move(id);
    j.scope = std::move(scope);
    j.word = free_reduce(word);
    j.sign = sign;
    j.rule = rule;
    j.premises = std::move(premises);
    cert_.judgments.push_back(std::move(j));
    return cert_.judgments.back();
  }

  Judgment& hyp(std::string id, std::string scope, const ParametricWord& word, Sign sign, std::string node,
                std::string branch, std::map<std::string, AffineExpr> at = {}) {
    Judgment& j = add(std::move(id), std::move(scope), word, sign, Rule::Hyp);
    j.side.node = std::move(node);
    j.side.branch = std::move(branch);
    j.side.at = std::move(at);
    return j;
  }

  BranchNode& node(std::string id, BranchNode::Kind kind) {
    BranchNode n;
    n.id = std::move(id);
    n.kind = kind;
    cert_.branches.push_back(std::move(n));
    return cert_.branches.back();
  }

  void leaf(std::string id, std::string conclusion, AffineExpr b, AffineExpr d) {
    BranchNode& n = node(std::move(id), BranchNode::Kind::Leaf);
    n.conclusion = std::move(conclusion);
    n.leaf_index = "i";
    n.formula = {AffineExpr(1), std::move(b), std::move(d)};
  }

 private:
  DecayCertificate& cert_;
};

PremiseRef ref(std::string id) { return PremiseRef{std::move(id), std::nullopt, std::nullopt}; }
PremiseRef ref(std::string id, AffineExpr power) { return PremiseRef{std::move(id), std::move(power), std::nullopt}; }

}  // namespace

DecayCertificate builtin_cable_certificate(Int p, Int q, const Rational& r) {
  const CableParams cp = euclid_uv(p, q);
  if (r <= Rational(0)) throw std::invalid_argument("companion decay bound must be positive");
  if (Rational(q, p) <= r) {
    throw std::invalid_argument("q/p = " + Rational(q, p).to_string() + " must exceed the companion bound " +
                                r.to_string());
  }
  const Int u = cp.u, v = cp.v, pq = p * q;
  const Sign pos = Sign::Positive, neg = Sign::Negative;

  DecayCertificate cert;
  cert.p = p;
  cert.q = q;
  cert.r = r;
  cert.u = u;
  cert.v = v;

  Parameter i{"i", ParameterRole::Universal, 1, "", {}, {}};
  Parameter j{"j", ParameterRole::Universal, 0, "", {}, {}};
  Parameter k{"k", ParameterRole::Witness, 0, "", {}, {}};
  Parameter n{"n", ParameterRole::Witness, 2, "", {}, {}};
  Parameter s2{"s", ParameterRole::Derived, 1, "B2", var("s", q) - var("k") - AffineExpr(u), var("s", p) - AffineExpr(v)};
  Parameter s3{"s", ParameterRole::Derived, 1, "B3", var("s", q) - var("k"), var("s", p)};
  cert.parameters = {i, j, k, n, s2, s3};

  const ParametricWord ml = g("m", u) * g("l", v);
  const ParametricWord mc = ml * g("t", -v);
  const ParametricWord longitude = blk(mc, -pq) * g("t", p);
  const auto conj = [](const ParametricWord& w, const AffineExpr& by) { return g("m", -by) * w * g("m", by); };
  const ParametricWord x = conj(g("t", -v) * ml, var("k"));
  const auto family = [&](const AffineExpr& e, const AffineExpr& kk) {
    return blk(conj(g("t", -v), kk), e) * blk(ml, e);
  };
  const auto target = [&](const AffineExpr& e, const AffineExpr& d) { return blk(mc, e) * blk(longitude, d); };

  Builder b(cert);

  BranchNode& root = b.node("root", BranchNode::Kind::Root);
  root.hypothesis = g("t", p);
  root.child = "n0";
  b.hyp("R0", "root", g("t", p), pos, "root", "");
  b.add("R1", "root", g("m", q) * g("l", p), pos, Rule::Eq, {ref("R0")});

  BranchNode& n0 = b.node("n0", BranchNode::Kind::Split);
  n0.pivot = mc;
  n0.positive = "B1";
  n0.negative = "n1";

  // mu_C > 1: multiply the root hypothesis by powers of mu_C.
  b.leaf("B1", "B1.final", AffineExpr(pq), AffineExpr(1));
  b.hyp("B1.h", "B1", mc, pos, "n0", "positive");
  b.add("B1.final", "B1", target(var("i") + AffineExpr(pq), 1), pos, Rule::Prod, {ref("B1.h", var("i")), ref("R0")});

  BranchNode& n1 = b.node("n1", BranchNode::Kind::Split);
  n1.pivot = x;
  n1.parameter = "k";
  n1.positive = "B2";
  n1.negative = "n2";

  // Some conjugate of t^-v m^u l^v is positive: pad it with decayed slopes.
  b.leaf("B2", "B2.final", var("s", pq), var("s"));
  b.hyp("B2.h", "B2", x, pos, "n1", "positive");
  b.add("B2.d1", "B2", g("m", AffineExpr(u) + var("k")) * g("l", v), pos, Rule::Decay, {ref("R1")});
  b.add("B2.d2", "B2", g("m", var("s", q) - AffineExpr(u) - var("k")) * g("l", var("s", p) - AffineExpr(v)), pos,
        Rule::Decay, {ref("R1")});
  b.add("B2.prod", "B2",
        g("m", AffineExpr(u) + var("k")) * g("l", v) * blk(x, var("i")) *
            g("m", var("s", q) - AffineExpr(u) - var("k")) * g("l", var("s", p) - AffineExpr(v)),
        pos, Rule::Prod, {ref("B2.d1"), ref("B2.h", var("i")), ref("B2.d2")});
  b.add("B2.final", "B2", target(var("i") + var("s", pq), var("s")), pos, Rule::Eq, {ref("B2.prod")});

  BranchNode& n2 = b.node("n2", BranchNode::Kind::Split);
  n2.pivot = family(AffineExpr(p - 1), var("k"));
  n2.parameter = "k";
  n2.positive = "n3";
  n2.negative = "B4";

  // Every family member at p-1 is negative: telescope the inverses.
  b.leaf("B4", "B4.final", AffineExpr(pq), AffineExpr(1));
  b.hyp("B4.h", "B4", family(AffineExpr(p - 1), var("j")), neg, "n2", "negative", {{"k", var("j")}});
  b.add("B4.eq", "B4", conj(g("t", v) * g("l", -v) * g("m", -u), var("j")) * g("m", 1), neg, Rule::Eq, {ref("B4.h")});
  b.add("B4.inv", "B4", g("m", -1) * conj(mc, var("j")), pos, Rule::Inv, {ref("B4.eq")});
  {
    Judgment& chain = b.add("B4.chain", "B4", g("m", -var("i")) * blk(mc, var("i")), pos, Rule::Prod);
    chain.premises.push_back(PremiseRef{"B4.inv", std::nullopt, IndexRange{"j", var("i") - AffineExpr(1), 0, -1}});
  }
  b.add("B4.d", "B4", g("m", var("i") + AffineExpr(q)) * g("l", p), pos, Rule::Decay, {ref("R1")});
  b.add("B4.prod", "B4", g("m", var("i") + AffineExpr(q)) * g("l", p) * g("m", -var("i")) * blk(mc, var("i")), pos,
        Rule::Prod, {ref("B4.d"), ref("B4.chain")});
  b.add("B4.final", "B4", target(var("i") + AffineExpr(pq), 1), pos, Rule::Eq, {ref("B4.prod")});

  BranchNode& n3 = b.node("n3", BranchNode::Kind::SignChange);
  n3.family = family(var("n"), var("k"));
  n3.index = "n";
  n3.lo = 1;
  n3.hi = p - 1;
  n3.below = "n3.below";
  n3.above = "n3.above";
  n3.child = p >= 3 ? "B3" : "";
  b.hyp("n3.above", "n3", family(AffineExpr(p - 1), var("k")), pos, "n2", "positive");
  b.hyp("n3.xk", "n3", x, neg, "n1", "negative", {{"k", var("k")}});
  b.add("n3.below", "n3", family(1, var("k")), neg, Rule::Eq, {ref("n3.xk")});

  if (p >= 3) {
    // The family changes sign between n-1 and n.
    const AffineExpr nm1 = var("n") - AffineExpr(1);
    b.leaf("B3", "B3.final", AffineExpr(pq * v) + var("s", pq), AffineExpr(v) + var("s"));
    b.hyp("B3.up", "B3", family(var("n"), var("k")), pos, "n3", "upper");
    b.add("B3.U", "B3", g("m", -var("k")) * g("t", var("n", -v)) * blk(ml, var("n")) * g("m", var("k")), pos, Rule::Eq,
          {ref("B3.up")});
    b.hyp("B3.lo", "B3", family(nm1, var("k")), neg, "n3", "lower");
    b.add("B3.Zi", "B3", family(nm1, var("k")).inverse(), pos, Rule::Inv, {ref("B3.lo")});
    b.add("B3.W", "B3", g("m", -var("k")) * blk(ml, -nm1) * g("t", v * nm1) * g("m", var("k")), pos, Rule::Eq,
          {ref("B3.Zi")});
    const ParametricWord p_word = g("m", -var("k")) * g("t", var("n", -v)) * ml * g("t", v * nm1) * g("m", var("k"));
    b.add("B3.P", "B3", p_word, pos, Rule::Prod, {ref("B3.U"), ref("B3.W")});
    b.add("B3.F1", "B3", g("m", AffineExpr(u) + var("k")) * g("l", v), pos, Rule::Decay, {ref("R1")});
    b.add("B3.T1", "B3", g("t", 1), pos, Rule::PowerRoot, {ref("R0")}).side.power = AffineExpr(p);
    b.add("B3.G1", "B3", g("t", (p * v) * nm1), pos, Rule::Prod, {ref("R0", v * nm1)});
    const ParametricWord root_word = conj(g("t", v * nm1), var("k"));
    b.add("B3.G2", "B3", blk(root_word, p), pos, Rule::Eq, {ref("B3.G1")});
    b.add("B3.F2", "B3", root_word, pos, Rule::PowerRoot, {ref("B3.G2")}).side.power = AffineExpr(p);
    b.add("B3.F3", "B3", g("m", var("s", q) - var("k")) * g("l", var("s", p)), pos, Rule::Decay, {ref("R1")});
    b.add("B3.F4", "B3", g("t", AffineExpr(v * p) - var("n", v)), pos, Rule::Prod,
          {ref("B3.T1", AffineExpr(v * p) - var("n", v))});
    b.add("B3.prod", "B3",
          g("m", AffineExpr(u) + var("k")) * g("l", v) * root_word * blk(p_word, var("i") - AffineExpr(1)) *
              g("m", var("s", q) - var("k")) * g("l", var("s", p)) * g("t", AffineExpr(v * p) - var("n", v)),
          pos, Rule::Prod,
          {ref("B3.F1"), ref("B3.F2"), ref("B3.P", var("i") - AffineExpr(1)), ref("B3.F3"), ref("B3.F4")});
    b.add("B3.final", "B3", target(var("i") + AffineExpr(pq * v) + var("s", pq), AffineExpr(v) + var("s")), pos,
          Rule::Eq, {ref("B3.prod")});
  }
  return cert;
}

}  // namespace decaykit
