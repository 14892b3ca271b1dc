#pragma once

#include "decaykit/slope/rational.hpp"
#include "decaykit/words/backends.hpp"
#include "decaykit/words/parametric_word.hpp"
#include "decaykit/words/presentation.hpp"

#include <memory>
#include <optional>
#include <string>

namespace decaykit {

/// Cabling data: p >= 2, q >= 1 coprime, and the minimal positive solution
/// of p u - q v = 1.
struct CableParams {
  Int p;
  Int q;
  Int u;
  Int v;
  friend bool operator==(const CableParams&, const CableParams&) = default;
};

/// Minimal positive v with p | 1 + q v, and u = (1 + q v) / p.
/// Throws std::invalid_argument unless gcd(p, q) = 1, p >= 2, q >= 1.
CableParams euclid_uv(Int p, Int q);

/// Words over {m, l, t}: the cable meridian m^u l^v t^-v and the cable
/// longitude (m^u l^v t^-v)^(-pq) t^p.
struct CablePeripherals {
  Word meridian;
  Word longitude;
};

CablePeripherals cable_peripherals(const CableParams& params);

/// The same two words with the power of the meridian kept as a block, for
/// display: "(m^2 l t^-1)^-6 t^2".
ParametricWord cable_longitude_compact(const CableParams& params);

/// H_1 class of a word over {m, l, t} in the cable knot group, where the
/// companion meridian is p times the cable meridian, the companion longitude
/// is null-homologous and t is q times the cable meridian.
Int cable_homology(const Word& w, const CableParams& params);

/// The companion group amalgamated with <t> along m^q l^p = t^p, with m and l
/// replaced by the companion's peripheral words. The new generator is "t"
/// unless the companion already uses that name ("t1", "t2", ... then).
/// Throws std::invalid_argument when the companion has no peripheral pair.
Presentation cable_group(const Presentation& companion, const CableParams& params);

/// Name of the generator cable_group() adds for this companion.
std::string cable_generator_name(const Presentation& companion);

/// Exponents (a, b) of the torus-knot meridian x^a y^b: a q + b p = 1 with
/// |a| minimal, ties broken towards positive a.
std::pair<Int, Int> torus_meridian_exponents(Int p, Int q);

/// <x, y | x^p y^-q> with meridian x^a y^b and longitude x^p mu^(-pq).
/// Throws std::invalid_argument unless p, q >= 2 are coprime.
Presentation torus_knot_presentation(Int p, Int q);

/// The pattern torus-knot group <m, t | t^p = m^q> receiving the satellite
/// quotient, with its exact backend.
Presentation satellite_target(Int p, Int q);
std::shared_ptr<const CentralAmalgamBackend> satellite_target_backend(Int p, Int q);

/// The quotient killing the companion longitude, on words over {m, l, t}:
/// m -> m, l -> 1, t -> t.
Word satellite_quotient(const Word& w, const CableParams& params);

/// The same quotient on words of cable_group(companion, params): companion
/// generators go to m^(their H_1 class), the added generator goes to t.
/// Throws std::invalid_argument if the companion's H_1 is not Z.
Word satellite_quotient(const Word& w, const Presentation& companion, const CableParams& params);

enum class LoVerdict { LeftOrderable, NotLeftOrderable, Unknown };

std::string to_string(LoVerdict v);

/// LEFT_ORDERABLE for r < pq - p - q; NOT_LEFT_ORDERABLE when the companion
/// is decay-bounded by d with q/p > d and r >= pq; UNKNOWN otherwise.
LoVerdict lo_window(Int p, Int q, const std::optional<Rational>& companion_decay, const Rational& r);

/// Genus (p - 1)(q - 1) / 2 of the (p, q) torus knot.
Int torus_knot_genus(Int p, Int q);

}  // namespace decaykit
