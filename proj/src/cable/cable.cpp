#include "decaykit/cable/cable.hpp"

#include "decaykit/words/abelian.hpp"

#include <cstdlib>
#include <stdexcept>

namespace decaykit {

CableParams euclid_uv(Int p, Int q) {
  if (p < 2 || q < 1) {
    throw std::invalid_argument("cable parameters need p >= 2 and q >= 1, got (" +
                                std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  if (gcd(p, q) != 1) {
    throw std::invalid_argument("p and q are not coprime: (" + std::to_string(p) + ", " +
                                std::to_string(q) + ")");
  }
  Int v = 1;
  while ((1 + q * v) % p != 0) ++v;
  return CableParams{p, q, (1 + q * v) / p, v};
}

CablePeripherals cable_peripherals(const CableParams& c) {
  Word meridian{{"m", c.u}, {"l", c.v}, {"t", -c.v}};
  Word longitude = meridian.power(-c.p * c.q) * Word::generator("t", c.p);
  return {meridian, longitude};
}

ParametricWord cable_longitude_compact(const CableParams& c) {
  Word meridian = cable_peripherals(c).meridian;
  return ParametricWord::block(ParametricWord::from_word(meridian), AffineExpr(-c.p * c.q)) *
         ParametricWord::syllable("t", AffineExpr(c.p));
}

Int cable_homology(const Word& w, const CableParams& c) {
  Int total = 0;
  for (const auto& s : w.syllables()) {
    if (s.generator == "m") {
      total += c.p * s.exponent;
    } else if (s.generator == "t") {
      total += c.q * s.exponent;
    } else if (s.generator != "l") {
      throw std::invalid_argument("cable homology is defined on words over m, l, t; got '" +
                                  s.generator + "'");
    }
  }
  return total;
}

std::string cable_generator_name(const Presentation& companion) {
  if (!companion.has_generator("t")) return "t";
  for (int i = 1;; ++i) {
    std::string name = "t" + std::to_string(i);
    if (!companion.has_generator(name)) return name;
  }
}

Presentation cable_group(const Presentation& companion, const CableParams& c) {
  if (!companion.peripheral()) {
    throw std::invalid_argument("the companion presentation has no meridian and longitude");
  }
  const std::string t = cable_generator_name(companion);
  std::map<std::string, Word> expand{{"m", companion.peripheral()->meridian},
                                     {"l", companion.peripheral()->longitude},
                                     {"t", Word::generator(t)}};
  auto generators = companion.generators();
  generators.push_back(t);
  auto relators = companion.relators();
  relators.push_back(substitute(Word{{"t", -c.p}, {"m", c.q}, {"l", c.p}}, expand));
  auto peripherals = cable_peripherals(c);
  PeripheralPair pair{substitute(peripherals.meridian, expand),
                      substitute(peripherals.longitude, expand)};
  return Presentation(std::move(generators), std::move(relators), std::move(pair));
}

std::pair<Int, Int> torus_meridian_exponents(Int p, Int q) {
  // a q = 1 (mod p) fixes a modulo p; the two candidates nearest zero are
  // the residue r in [0, p) and r - p.
  Int r = 0;
  while ((r * q - 1) % p != 0) ++r;
  Int a = r;
  if (p - r < r) a = r - p;  // strictly smaller |a|; a tie keeps the positive one
  Int b = (1 - a * q) / p;
  return {a, b};
}

Presentation torus_knot_presentation(Int p, Int q) {
  if (p < 2 || q < 2 || gcd(p, q) != 1) {
    throw std::invalid_argument("torus knot parameters must be coprime and >= 2, got (" +
                                std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  auto [a, b] = torus_meridian_exponents(p, q);
  Word meridian{{"x", a}, {"y", b}};
  Word longitude = Word::generator("x", p) * meridian.power(-p * q);
  return Presentation({"x", "y"}, {Word{{"x", p}, {"y", -q}}}, PeripheralPair{meridian, longitude});
}

Presentation satellite_target(Int p, Int q) {
  return Presentation({"m", "t"}, {Word{{"t", p}, {"m", -q}}});
}

std::shared_ptr<const CentralAmalgamBackend> satellite_target_backend(Int p, Int q) {
  return make_cyclic_amalgam_backend("t", p, "m", q);
}

Word satellite_quotient(const Word& w, const CableParams&) {
  Word out;
  for (const auto& s : w.syllables()) {
    if (s.generator == "l") continue;
    if (s.generator != "m" && s.generator != "t") {
      throw std::invalid_argument("satellite quotient expects words over m, l, t; got '" +
                                  s.generator + "'");
    }
    out.append(s);
  }
  return out;
}

Word satellite_quotient(const Word& w, const Presentation& companion, const CableParams&) {
  Abelianization h1(companion);
  if (h1.free_rank() != 1 || !h1.torsion_orders().empty()) {
    throw std::invalid_argument("the companion's first homology is not infinite cyclic");
  }
  const std::string t = cable_generator_name(companion);
  std::map<std::string, Word> images;
  for (std::size_t i = 0; i < companion.generators().size(); ++i) {
    images[companion.generators()[i]] = Word::generator("m", h1.generator_image(i).free[0]);
  }
  images[t] = Word::generator("t");
  Word out;
  for (const auto& s : w.syllables()) {
    auto it = images.find(s.generator);
    if (it == images.end()) {
      throw std::invalid_argument("generator '" + s.generator + "' is not in the cable group");
    }
    out.append(it->second.power(s.exponent));
  }
  return out;
}

std::string to_string(LoVerdict v) {
  switch (v) {
    case LoVerdict::LeftOrderable: return "LEFT_ORDERABLE";
    case LoVerdict::NotLeftOrderable: return "NOT_LEFT_ORDERABLE";
    case LoVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

LoVerdict lo_window(Int p, Int q, const std::optional<Rational>& companion_decay, const Rational& r) {
  if (p < 2 || q < 1 || gcd(p, q) != 1) {
    throw std::invalid_argument("lo_window needs coprime p >= 2, q >= 1");
  }
  if (r < Rational(p * q - p - q)) return LoVerdict::LeftOrderable;
  if (companion_decay && Rational(q, p) > *companion_decay && r >= Rational(p * q)) {
    return LoVerdict::NotLeftOrderable;
  }
  return LoVerdict::Unknown;
}

Int torus_knot_genus(Int p, Int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("torus knot genus needs positive p, q");
  return (p - 1) * (q - 1) / 2;
}

}  // namespace decaykit
