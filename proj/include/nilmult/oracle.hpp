#pragma once

// The 2-nilpotent multiplier (R cap gamma_3(F)) / [R,F,F] of a class-two
// group F/R on two generators, computed from the relators alone.
//
// For class two, gamma_3(F) lies in R, and gamma_5(F) = [gamma_3,F,F] lies in
// [R,F,F], so the multiplier is gamma_3/gamma_5 (free abelian of rank 5)
// modulo the image of [R,F,F]. Modulo gamma_5 that image is spanned by
//
//   [r,x,y] and [r,x,y,z],   r a relator, x, y, z in {a, b}.
//
// Conjugates and products of relators only add commutators of two elements
// of weight >= 2, which collapse onto these generators mod gamma_5.

#include "nilmult/bigint.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/hall.hpp"
#include "nilmult/lattice.hpp"
#include "nilmult/params.hpp"
#include "nilmult/word.hpp"

#include <array>
#include <vector>

namespace nilmult {

inline Presentation presentation_relators(const GroupParams& g) {
  validate(g);
  const Word c = Word::commutator({Word::gen(Gen::a), Word::gen(Gen::b)});
  auto c_pow = [](const Int& e) {
    return Word::commutator({Word::gen(Gen::a), Word::gen(Gen::b)}, e);
  };
  Presentation pres{g.p, {}};
  pres.relators.push_back(c_pow(g.pg()));
  pres.relators.push_back(Word::commutator({c, Word::gen(Gen::a)}));
  pres.relators.push_back(Word::commutator({c, Word::gen(Gen::b)}));
  pres.relators.push_back(Word::gen(Gen::a, g.pa()).append(c_pow(-g.pr())));
  pres.relators.push_back(Word::gen(Gen::b, g.pb()).append(c_pow(-g.ps())));
  return pres;
}

// Rows of the relation lattice in gamma_3/gamma_5 = Z^5.
inline IntLattice relation_lattice(const std::vector<NfElement>& relators) {
  const std::array<NfElement, 2> gens = {NfElement::generator(kA), NfElement::generator(kB)};
  IntLattice lattice(5);
  auto push = [&](const NfElement& x) {
    auto v = gamma3_projection(x);
    lattice.add_row(IntVector(v.begin(), v.end()));
  };
  for (const auto& r : relators) {
    for (const auto& x : gens) {
      const NfElement rx = comm(r, x);
      for (const auto& y : gens) {
        const NfElement rxy = comm(rx, y);
        push(rxy);
        for (const auto& z : gens) push(comm(rxy, z));
      }
    }
  }
  return lattice;
}

// Class-two check on the relator set: the relators lying in gamma_3 must
// generate gamma_3 modulo gamma_4, i.e. their ([a,b,a], [a,b,b]) parts span
// Z^2. For a finite (hence nilpotent) quotient that forces gamma_3(F) <= R.
inline void require_class_two(const std::vector<NfElement>& relators) {
  Int g = 0;
  std::vector<std::array<Int, 2>> w3;
  for (const auto& r : relators)
    if (in_gamma3(r)) w3.push_back({r[kCA], r[kCB]});
  for (std::size_t i = 0; i < w3.size(); ++i)
    for (std::size_t j = i + 1; j < w3.size(); ++j) {
      Int minor = w3[i][0] * w3[j][1] - w3[i][1] * w3[j][0];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
    }
  if (g != 1)
    throw NotClassTwo("relators in gamma_3 do not generate [a,b,a] and [a,b,b] modulo gamma_4");
}

inline AbelianInvariants two_nilpotent_multiplier(const Presentation& pres) {
  std::vector<NfElement> rel;
  rel.reserve(pres.relators.size());
  for (const auto& w : pres.relators) rel.push_back(from_word(w));
  require_class_two(rel);
  return quotient_invariants(relation_lattice(rel));
}

inline AbelianInvariants multiplier_of(const GroupParams& g) {
  return two_nilpotent_multiplier(presentation_relators(g));
}

}  // namespace nilmult
