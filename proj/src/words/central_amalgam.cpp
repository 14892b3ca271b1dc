#include "decaykit/words/backends.hpp"

#include <stdexcept>

namespace decaykit {

namespace {

// Folds a coset coordinate into [0, modulus), carrying whole turns into the
// central coordinate (rep(1)^modulus is the central generator).
void settle(Int modulus, Int& central, Int& coset) {
  if (modulus == 0) return;
  central += floor_div(coset, modulus);
  coset = floor_mod(coset, modulus);
}

}  // namespace

CentralAmalgamBackend::CentralAmalgamBackend(std::string name, AbelianFactor first,
                                             AbelianFactor second, Word central_word)
    : name_(std::move(name)), factors_{std::move(first), std::move(second)},
      central_word_(std::move(central_word)) {
  for (int f = 0; f < 2; ++f) {
    if (factors_[f].modulus < 0) throw std::invalid_argument("negative coset modulus");
    for (const auto& [g, coords] : factors_[f].generators) {
      (void)coords;
      if (owner_.count(g)) throw std::invalid_argument("generator '" + g + "' is in both factors");
      owner_[g] = f;
      alphabet_.push_back(g);
    }
  }
  for (int f = 0; f < 2; ++f) {
    Word rep;
    for (const auto& s : factors_[f].basis) rep.append(s);
    NormalForm nf = normal_form(rep);
    bool unit = nf.central == 0 && nf.cosets.size() == 1 && nf.cosets[0] == std::pair<int, Int>{f, 1};
    if (factors_[f].modulus == 1) unit = nf.central == 1 && nf.cosets.empty();
    if (!unit) throw std::invalid_argument("coset representative of factor " + std::to_string(f) +
                                           " does not have coordinates (0, 1)");
  }
  NormalForm c = normal_form(central_word_);
  if (!(c.central == 1 && c.cosets.empty())) {
    throw std::invalid_argument("central word " + central_word_.to_string() +
                                " does not generate the amalgamated subgroup");
  }
}

AbelianFactor::Coordinates CentralAmalgamBackend::coordinates(int factor, const Syllable& s) const {
  const auto& unit = factors_[factor].generators.at(s.generator);
  return {unit.central * s.exponent, unit.coset * s.exponent};
}

CentralAmalgamBackend::NormalForm CentralAmalgamBackend::normal_form(const Word& w) const {
  NormalForm nf;
  for (const auto& s : w.syllables()) {
    auto it = owner_.find(s.generator);
    if (it == owner_.end()) {
      throw std::invalid_argument("generator '" + s.generator + "' is not in the alphabet of " +
                                  name_);
    }
    const int f = it->second;
    const Int modulus = factors_[f].modulus;
    auto [central, coset] = coordinates(f, s);
    nf.central += central;
    if (!nf.cosets.empty() && nf.cosets.back().first == f) {
      Int y = nf.cosets.back().second + coset;
      settle(modulus, nf.central, y);
      if (y == 0) {
        nf.cosets.pop_back();
      } else {
        nf.cosets.back().second = y;
      }
      continue;
    }
    settle(modulus, nf.central, coset);
    if (coset != 0) nf.cosets.emplace_back(f, coset);
  }
  return nf;
}

Word CentralAmalgamBackend::to_word(const NormalForm& nf) const {
  Word out = central_word_.power(nf.central);
  for (const auto& [f, y] : nf.cosets) {
    for (const auto& s : factors_[f].basis) out.append(Syllable{s.generator, s.exponent * y});
  }
  return out;
}

std::optional<Word> CentralAmalgamBackend::canonical(const Word& w) const {
  return to_word(normal_form(w));
}

std::shared_ptr<const CentralAmalgamBackend> make_gpq_backend(Int p, Int q) {
  if (p < 2 || q < 1 || gcd(p, q) != 1) {
    throw std::invalid_argument("G_{p,q} needs coprime p >= 2 and q >= 1, got (" +
                                std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  // Minimal positive v with p | 1 + qv, so that pu - qv = 1.
  Int v = 1;
  while ((1 + q * v) % p != 0) ++v;
  const Int u = (1 + q * v) / p;

  // Z^2 = <m, l> in the basis {m^q l^p, m^u l^v}: m^a l^b has central
  // coordinate ub - va and coset coordinate pa - qb.
  AbelianFactor lattice;
  lattice.generators["m"] = {-v, p};
  lattice.generators["l"] = {u, -q};
  lattice.modulus = 0;
  lattice.basis = {{"m", u}, {"l", v}};

  AbelianFactor cyclic;
  cyclic.generators["t"] = {0, 1};
  cyclic.modulus = p;
  cyclic.basis = {{"t", 1}};

  return std::make_shared<CentralAmalgamBackend>(
      "G(" + std::to_string(p) + "," + std::to_string(q) + ")", std::move(lattice),
      std::move(cyclic), Word::generator("t", p));
}

Presentation gpq_presentation(Int p, Int q) {
  return Presentation({"m", "l", "t"},
                      {commutator(Word::generator("m"), Word::generator("l")),
                       Word{{"t", -p}, {"m", q}, {"l", p}}});
}

std::shared_ptr<const CentralAmalgamBackend> make_cyclic_amalgam_backend(std::string x, Int p,
                                                                         std::string y, Int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("amalgam exponents must be positive");
  if (x == y) throw std::invalid_argument("amalgam generators must differ");
  AbelianFactor first;
  first.generators[x] = {0, 1};
  first.modulus = p;
  first.basis = {{x, 1}};
  AbelianFactor second;
  second.generators[y] = {0, 1};
  second.modulus = q;
  second.basis = {{y, 1}};
  std::string name = "amalgam(" + x + "^" + std::to_string(p) + "=" + y + "^" + std::to_string(q) + ")";
  Word central = Word::generator(x, p);
  return std::make_shared<CentralAmalgamBackend>(std::move(name), std::move(first), std::move(second),
                                                 std::move(central));
}

Word normal_form_Gpq(const Word& w, Int p, Int q) { return *make_gpq_backend(p, q)->canonical(w); }

}  // namespace decaykit
