#pragma once

#include "decaykit/certificate/certificate.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace decaykit {

/// One checked instance of a leaf: mu_C^(A i + B) lambda_C^D > 1 at a grid
/// point, i.e. the slope r_i = (A i + B) / D carried with weight
/// gcd(A i + B, D).
struct LeafInstance {
  Assignment point;
  Int meridian_exponent;
  Int longitude_exponent;
  Rational slope;
  Int weight;
};

struct LeafResult {
  std::string leaf;
  std::string formula;  // "(1*i + 22)/1"
  std::vector<LeafInstance> instances;
};

struct Failure {
  std::string judgment;  // judgment or branch-node id; "" for the certificate itself
  Assignment point;
  std::string reason;
};

/// Range actually used for a sign-change index, and whether it also meets
/// the alternative bound index <= q - 1.
struct IndexRangeNote {
  std::string node;
  std::string index;
  Int lo;
  Int hi;
  bool within_q_bound;
};

struct VerificationReport {
  bool accepted = false;
  Int p = 0;
  Int q = 0;
  Rational r;
  Int grid_bound = 0;
  /// Always true: parameters quantified over all integers are only checked
  /// on the finite grid.
  bool grid_limited = true;
  std::vector<LeafResult> leaves;
  std::vector<Failure> failures;
  std::vector<IndexRangeNote> index_ranges;
  std::size_t judgments_checked = 0;
  std::size_t instances_checked = 0;

  std::string verdict() const { return accepted ? "ACCEPT" : "REJECT"; }
  nlohmann::json to_json() const;
};

inline constexpr Int kDefaultGridBound = 5;

/// Checks every judgment and every branch node at every grid point. Each
/// universal or witness parameter ranges over [min, min + grid_bound]; a
/// sign-change index ranges over its whole interval (lo, hi]; derived
/// parameters are recomputed at each point. Failures name the judgment or
/// node, the grid point and the reason; the first failing point of each item
/// is reported. Deterministic: identical inputs give identical reports.
VerificationReport verify_derivation(const DecayCertificate& cert, Int grid_bound = kDefaultGridBound);

struct DecayConclusion {
  Int p;
  Int q;
  Rational companion_decay;
  Rational decay;
  std::string statement;
  std::vector<std::string> notes;
  bool grid_limited;
  Int grid_bound;

  nlohmann::json to_json() const;
};

/// Turns an accepted report into the statement that the cable is
/// pq-decayed. Throws std::invalid_argument for a rejected report or one
/// without leaves.
DecayConclusion conclude_decay(const VerificationReport& report);

}  // namespace decaykit
