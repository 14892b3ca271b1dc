#pragma once

// Independent reference computations for the tests. None of these call the
// library's algorithms for the quantity they check: words are spelled out
// letter by letter, group equalities are tested through explicit
// permutation representations and abelian invariants, and searches are
// replaced by exhaustive enumeration.

#include "decaykit/slope/rational.hpp"
#include "decaykit/words/word.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using decaykit::Int;
using decaykit::Word;

// ---- words as letter sequences ----

using Letter = std::pair<std::string, int>;  // generator, +1 or -1

inline std::vector<Letter> letters_of(const Word& w) {
  std::vector<Letter> out;
  for (const auto& s : w.syllables()) {
    const int sign = s.exponent > 0 ? 1 : -1;
    for (Int i = 0; i < (s.exponent > 0 ? s.exponent : -s.exponent); ++i) out.push_back({s.generator, sign});
  }
  return out;
}

// Stack-based free reduction of a letter sequence.
inline std::vector<Letter> reduce(const std::vector<Letter>& in) {
  std::vector<Letter> stack;
  for (const auto& x : in) {
    if (!stack.empty() && stack.back().first == x.first && stack.back().second == -x.second) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return stack;
}

inline std::vector<Letter> concat(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::vector<Letter> invert(const std::vector<Letter>& a) {
  std::vector<Letter> out(a.rbegin(), a.rend());
  for (auto& x : out) x.second = -x.second;
  return out;
}

inline std::vector<Letter> power(const std::vector<Letter>& a, Int n) {
  std::vector<Letter> out;
  const auto base = n >= 0 ? a : invert(a);
  for (Int i = 0; i < (n >= 0 ? n : -n); ++i) out = concat(out, base);
  return out;
}

inline std::vector<Letter> g(const std::string& gen, Int e) { return power({{gen, 1}}, e); }

inline Int exponent_sum(const std::vector<Letter>& w, const std::string& gen) {
  Int s = 0;
  for (const auto& x : w) {
    if (x.first == gen) s += x.second;
  }
  return s;
}

inline Word random_word(std::mt19937_64& rng, const std::vector<std::string>& gens, int max_len,
                        int max_exp = 3) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> e(-max_exp, max_exp);
  Word w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int x = e(rng);
    if (x == 0) x = 1;
    w.append(decaykit::Syllable{gens[pick(rng)], x});
  }
  return w;
}

// ---- permutations ----

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a * b)(x) = a(b(x)): words act right to left, so evaluation composes in
// reading order as x -> w_1(w_2(...)). Any consistent convention is a
// homomorphism or anti-homomorphism; both detect equality the same way.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

inline Perm inverse_perm(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

inline Perm perm_power(const Perm& a, Int e) {
  Perm out = identity_perm(static_cast<int>(a.size()));
  const Perm base = e >= 0 ? a : inverse_perm(a);
  for (Int i = 0; i < (e >= 0 ? e : -e); ++i) out = compose(out, base);
  return out;
}

// Random permutation of n points made of disjoint k-cycles (plus fixed points).
inline Perm random_cycles(std::mt19937_64& rng, int n, int k) {
  std::vector<int> pts(static_cast<std::size_t>(n));
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  Perm p = identity_perm(n);
  for (int start = 0; start + k <= n; start += k) {
    for (int j = 0; j < k; ++j) {
      p[static_cast<std::size_t>(pts[static_cast<std::size_t>(start + j)])] =
          pts[static_cast<std::size_t>(start + (j + 1) % k)];
    }
  }
  return p;
}

using Rep = std::map<std::string, Perm>;

inline Perm evaluate(const std::vector<Letter>& w, const Rep& rep) {
  Perm out = identity_perm(static_cast<int>(rep.begin()->second.size()));
  for (const auto& [gen, sign] : w) {
    const Perm& p = rep.at(gen);
    out = compose(out, sign > 0 ? p : inverse_perm(p));
  }
  return out;
}

// Representations of <m, l, t | [m, l], t^p = m^q l^p> onto non-abelian
// permutation groups: l trivial with m^q = t^p = 1, or m trivial with
// l^p = t^p = 1, plus cyclic ones where all three are rotations.
inline std::vector<Rep> gpq_representations(Int p, Int q, std::mt19937_64& rng, int count = 6) {
  std::vector<Rep> reps;
  const int P = static_cast<int>(p), Q = static_cast<int>(q);
  for (int i = 0; i < count; ++i) {
    const int n = 3 * P * Q + 1;
    reps.push_back({{"m", random_cycles(rng, n, Q)}, {"l", identity_perm(n)}, {"t", random_cycles(rng, n, P)}});
    reps.push_back({{"m", identity_perm(n)}, {"l", random_cycles(rng, n, P)}, {"t", random_cycles(rng, n, P)}});
  }
  // Cyclic: rotation by a, b, c on Z/N with p c = q a + p b (mod N).
  for (int N : {7, 11, 13}) {
    for (int a = 0; a < N; a += 3) {
      for (int b = 0; b < N; b += 4) {
        for (int c = 0; c < N; ++c) {
          if (((P * c - Q * a - P * b) % N + N) % N != 0) continue;
          auto rot = [N](int k) {
            Perm r(static_cast<std::size_t>(N));
            for (int x = 0; x < N; ++x) r[static_cast<std::size_t>(x)] = (x + k) % N;
            return r;
          };
          reps.push_back({{"m", rot(a)}, {"l", rot(b)}, {"t", rot(c)}});
          break;
        }
      }
    }
  }
  return reps;
}

// H_1 of G_{p,q} is detected exactly by m -> p, l -> 0, t -> q and
// m -> 0, l -> 1, t -> 1.
inline std::pair<Int, Int> gpq_homology(const std::vector<Letter>& w, Int p, Int q) {
  const Int em = exponent_sum(w, "m"), el = exponent_sum(w, "l"), et = exponent_sum(w, "t");
  return {p * em + q * et, el + et};
}

// Necessary condition for equality in G_{p,q}; also decides inequality
// whenever a representation separates the words.
inline bool gpq_maybe_equal(const std::vector<Letter>& a, const std::vector<Letter>& b, Int p, Int q,
                            const std::vector<Rep>& reps) {
  if (gpq_homology(a, p, q) != gpq_homology(b, p, q)) return false;
  for (const auto& rep : reps) {
    if (evaluate(a, rep) != evaluate(b, rep)) return false;
  }
  return true;
}

// ---- arithmetic ----

// Smallest v >= 1 with p | 1 + q v, and u = (1 + q v) / p.
inline std::pair<Int, Int> brute_uv(Int p, Int q) {
  for (Int v = 1;; ++v) {
    if ((1 + q * v) % p == 0) return {(1 + q * v) / p, v};
  }
}

inline Int brute_gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  Int best = 0;
  for (Int d = 1; d <= std::max(a, b); ++d) {
    if (a % d == 0 && b % d == 0) best = d;
  }
  return best;
}

// Lattice points of Z^2 with |a| + |b| <= radius, origin excluded.
inline int l1_ball_count(int radius) {
  int count = 0;
  for (int a = -radius; a <= radius; ++a) {
    for (int b = -radius; b <= radius; ++b) {
      if ((a != 0 || b != 0) && std::abs(a) + std::abs(b) <= radius) ++count;
    }
  }
  return count;
}

// Syllable normal forms of Z/2 * Z/3 = <a | a^2> * <b | b^3> of letter
// length <= radius, counting a^1 as length 1 and b^1, b^2 = b^-1 as length 1.
inline std::set<std::string> z2_free_z3_ball(int radius) {
  std::set<std::string> out;
  // alternate a and b^{1|2}; length counts shortest spelling.
  std::vector<std::pair<std::string, int>> frontier{{"", 0}};
  std::set<std::string> seen{""};
  for (int len = 1; len <= radius; ++len) {
    std::vector<std::pair<std::string, int>> next;
    for (const auto& [word, last] : frontier) {
      // last: 0 none, 1 ended with a, 2 ended with b-syllable
      if (last != 1) next.push_back({word + "a", 1});
      if (last != 2) {
        next.push_back({word + "b", 2});
        next.push_back({word + "B", 2});
      }
    }
    for (const auto& n : next) {
      if (seen.insert(n.first).second) out.insert(n.first);
    }
    frontier = std::move(next);
  }
  return out;
}

// ---- sign assignments ----

struct SignProblem {
  std::size_t n = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::array<std::size_t, 3>> products;
};

// Exhaustive search for a consistent sign vector (n <= 20).
inline bool brute_force_consistent(const SignProblem& sp) {
  for (std::uint32_t mask = 0; mask < (1u << sp.n); ++mask) {
    auto pos = [&](std::size_t e) { return ((mask >> e) & 1u) != 0; };
    bool ok = true;
    for (std::size_t e = 0; e < sp.n && ok; ++e) ok = pos(e) != pos(sp.inverse[e]);
    for (const auto& t : sp.products) {
      if (!ok) break;
      if (pos(t[0]) && pos(t[1]) && !pos(t[2])) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
