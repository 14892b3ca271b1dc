#pragma once

#include "decaykit/certificate/certificate.hpp"

namespace decaykit {

/// The general certificate that cable(p, q) of an r-decayed companion is
/// pq-decayed, specialised to concrete p, q and r. It splits on the sign of
/// the cable meridian, then on the conjugates m^-k t^-v m^u l^v m^k and on
/// the family (m^-k t^-v m^k)^n (m^u l^v)^n, ending in four leaves.
///
/// Throws std::invalid_argument unless p >= 2, q >= 1, gcd(p, q) = 1,
/// r > 0 and q/p > r.
DecayCertificate builtin_cable_certificate(Int p, Int q, const Rational& r);

}  // namespace decaykit
