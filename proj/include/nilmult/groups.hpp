#pragma once

// Elements of G = G_p(alpha, beta, gamma; rho, sigma) in the normal form
// a^i b^j c^k, c = [a,b], with 0 <= i < p^alpha, 0 <= j < p^beta,
// 0 <= k < p^gamma. c is central and b^j a^i = a^i b^j c^(-ij).

#include "nilmult/bigint.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/oracle.hpp"
#include "nilmult/params.hpp"
#include "nilmult/word.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace nilmult {

struct GroupElement {
  Int i = 0;
  Int j = 0;
  Int k = 0;

  bool is_identity() const { return i == 0 && j == 0 && k == 0; }
  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.i == y.i && x.j == y.j && x.k == y.k;
  }
  friend bool operator<(const GroupElement& x, const GroupElement& y) {
    if (x.i != y.i) return x.i < y.i;
    if (x.j != y.j) return x.j < y.j;
    return x.k < y.k;
  }
};

inline std::string to_string(const GroupElement& x) {
  return "a^" + x.i.get_str() + " b^" + x.j.get_str() + " c^" + x.k.get_str();
}

inline std::ostream& operator<<(std::ostream& os, const GroupElement& x) { return os << to_string(x); }

// Brings arbitrary exponents to the normal-form ranges: k first, then the
// b-carry b^(p^beta) = c^(p^sigma), then the a-carry a^(p^alpha) = c^(p^rho).
inline GroupElement normalize(const GroupParams& g, GroupElement x) {
  const Int pg = g.pg();
  x.k = floor_mod(x.k, pg);
  Int q;
  x.j = floor_divmod(x.j, g.pb(), q);
  x.k += q * g.ps();
  x.i = floor_divmod(x.i, g.pa(), q);
  x.k += q * g.pr();
  x.k = floor_mod(x.k, pg);
  return x;
}

inline GroupElement g_mul(const GroupParams& g, const GroupElement& x, const GroupElement& y) {
  return normalize(g, {x.i + y.i, x.j + y.j, x.k + y.k - x.j * y.i});
}

inline GroupElement g_pow(const GroupParams& g, GroupElement x, Int n) {
  if (n < 0) {
    // (a^i b^j c^k)^-1 = c^-k b^-j a^-i = a^-i b^-j c^(-k - ij)
    x = normalize(g, {-x.i, -x.j, -x.k - x.i * x.j});
    n = -n;
  }
  GroupElement r;
  while (n != 0) {
    if (mpz_odd_p(n.get_mpz_t())) r = g_mul(g, r, x);
    n >>= 1;
    if (n != 0) x = g_mul(g, x, x);
  }
  return r;
}

inline GroupElement g_inv(const GroupParams& g, const GroupElement& x) { return g_pow(g, x, -1); }

inline GroupElement gen_a(const GroupParams& g) { return normalize(g, {1, 0, 0}); }
inline GroupElement gen_b(const GroupParams& g) { return normalize(g, {0, 1, 0}); }
inline GroupElement gen_c(const GroupParams& g) { return normalize(g, {0, 0, 1}); }

inline Int group_order(const GroupParams& g) {
  validate(g);
  return ipow(g.p, g.alpha + g.beta + g.gamma);
}

// The order is a power of p dividing |G|; test x^(p^t) for increasing t.
inline Int element_order(const GroupParams& g, const GroupElement& x) {
  Int n = 1;
  GroupElement y = x;
  while (!y.is_identity()) {
    y = g_pow(g, y, g.p);
    n *= g.p;
  }
  return n;
}

inline bool commutes(const GroupParams& g, const GroupElement& x, const GroupElement& y) {
  return g_mul(g, x, y) == g_mul(g, y, x);
}

inline bool is_central(const GroupParams& g, const GroupElement& x) {
  return commutes(g, x, gen_a(g)) && commutes(g, x, gen_b(g));
}

// Generators a^(p^gamma), [a,b], b^(p^gamma) of Z(G), in normal form and
// without removing duplicates or identities.
inline std::vector<GroupElement> center(const GroupParams& g) {
  validate(g);
  const Int pg = g.pg();
  return {g_pow(g, gen_a(g), pg), gen_c(g), g_pow(g, gen_b(g), pg)};
}

// Nontrivial elements of Z(G) = { a^i b^j c^k : p^gamma | i, p^gamma | j }.
inline std::vector<GroupElement> central_elements(const GroupParams& g) {
  validate(g);
  const Int pg = g.pg();
  std::vector<GroupElement> out;
  for (Int i = 0; i < g.pa(); i += pg)
    for (Int j = 0; j < g.pb(); j += pg)
      for (Int k = 0; k < pg; ++k)
        if (i != 0 || j != 0 || k != 0) out.push_back({i, j, k});
  return out;
}

// Visits every element in lexicographic (i, j, k) order.
template <typename Fn>
void for_each_element(const GroupParams& g, Fn&& fn) {
  const Int pa = g.pa(), pb = g.pb(), pg = g.pg();
  for (Int i = 0; i < pa; ++i)
    for (Int j = 0; j < pb; ++j)
      for (Int k = 0; k < pg; ++k) fn(GroupElement{i, j, k});
}

inline Word element_word(const GroupElement& x) {
  Word w;
  if (x.i != 0) w.append(Word::gen(Gen::a, x.i));
  if (x.j != 0) w.append(Word::gen(Gen::b, x.j));
  if (x.k != 0) w.append(Word::commutator({Word::gen(Gen::a), Word::gen(Gen::b)}, x.k));
  return w;
}

// Presentation of G / <d> for central d: the defining relators plus d.
inline Presentation quotient_presentation(const GroupParams& g, const GroupElement& d) {
  Presentation pres = presentation_relators(g);
  const GroupElement nd = normalize(g, d);
  if (!is_central(g, nd)) throw NotCentral(to_string(nd) + " is not central");
  pres.relators.push_back(element_word(nd));
  return pres;
}

}  // namespace nilmult
