#pragma once

// Arithmetic in F/gamma_5(F), F free on {a, b}.
//
// Commutators are [x,y] = x^-1 y^-1 x y and iterate to the left:
// [x,y,z] = [[x,y],z]. With a > b the basic commutators of weight <= 4 are
//
//   a, b, c = [a,b], [c,a], [c,b], [c,a,a], [c,b,a], [c,b,b]
//
// and every element has a unique collected form
//
//   a^e0 b^e1 c^e2 [c,a]^e3 [c,b]^e4 [c,a,a]^e5 [c,b,a]^e6 [c,b,b]^e7.
//
// In rank two, gamma_2/gamma_5 is free abelian on the last six basis
// elements ([c,c] = 1 and [gamma_2, gamma_3] lies in gamma_5), so the tail
// c^e2 ... [c,b,b]^e7 behaves as a vector in Z^6 on which conjugation by a
// and by b acts by unipotent integer matrices. Collection then reduces to
// closed formulas: moving b^m past a^n and conjugating the tail.

#include "nilmult/bigint.hpp"
#include "nilmult/errors.hpp"

#include <array>
#include <cstddef>
#include <ostream>
#include <string>

namespace nilmult {

enum Basis : std::size_t { kA, kB, kC, kCA, kCB, kCAA, kCBA, kCBB };

inline constexpr std::size_t kBasisSize = 8;
inline constexpr std::array<int, kBasisSize> kBasisWeight = {1, 1, 2, 3, 3, 4, 4, 4};
inline constexpr std::array<const char*, kBasisSize> kBasisName = {
    "a", "b", "[a,b]", "[a,b,a]", "[a,b,b]", "[a,b,a,a]", "[a,b,b,a]", "[a,b,b,b]"};

struct NfElement {
  std::array<Int, kBasisSize> e{};

  static NfElement identity() { return {}; }
  static NfElement generator(Basis which, const Int& exp = 1) {
    NfElement x;
    x.e[which] = exp;
    return x;
  }

  const Int& operator[](std::size_t i) const { return e[i]; }
  Int& operator[](std::size_t i) { return e[i]; }

  bool is_identity() const {
    for (const auto& v : e)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const NfElement& x, const NfElement& y) { return x.e == y.e; }
};

namespace detail {

// Coordinates of gamma_2/gamma_5 in the order c, [c,a], [c,b], [c,a,a], [c,b,a], [c,b,b].
using Tail = std::array<Int, 6>;

inline Tail tail_of(const NfElement& x) {
  return {x[kC], x[kCA], x[kCB], x[kCAA], x[kCBA], x[kCBB]};
}

inline void add_into(Tail& acc, const Tail& t) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t[i];
}

// w -> w^{a^n}. With N: c -> [c,a] -> [c,a,a], [c,b] -> [c,b,a],
// conjugation by a^n is I + n N + C(n,2) N^2.
inline Tail conj_a(const Tail& w, const Int& n) {
  if (n == 0) return w;
  const Int n2 = binom2(n);
  return {w[0], w[1] + n * w[0], w[2], w[3] + n * w[1] + n2 * w[0], w[4] + n * w[2], w[5]};
}

// w -> w^{b^n}. With M: c -> [c,b] -> [c,b,b], [c,a] -> [c,a,b] = [c,b,a] mod gamma_5.
inline Tail conj_b(const Tail& w, const Int& n) {
  if (n == 0) return w;
  const Int n2 = binom2(n);
  return {w[0], w[1], w[2] + n * w[0], w[3], w[4] + n * w[1], w[5] + n * w[2] + n2 * w[0]};
}

// sum_{i<m} w^{b^i}, i.e. (m I + C(m,2) M + C(m,3) M^2) w, so that
// (b w)^m = b^m * b_geometric(w, m) for w in gamma_2.
inline Tail b_geometric(const Tail& w, const Int& m) {
  const Int m2 = binom2(m);
  const Int m3 = binom3(m);
  return {m * w[0], m * w[1], m * w[2] + m2 * w[0], m * w[3], m * w[4] + m2 * w[1],
          m * w[5] + m2 * w[2] + m3 * w[0]};
}

// [a^n, b] = c^n [c,a]^C(n,2) [c,a,a]^C(n,3)
inline Tail comm_apow_b(const Int& n) { return {n, binom2(n), 0, binom3(n), 0, 0}; }

}  // namespace detail

inline NfElement mul(const NfElement& x, const NfElement& y) {
  using namespace detail;
  // a^x0 b^x1 w_x a^y0 b^y1 w_y
  //   = a^(x0+y0) b^(x1+y1) [ (z + w_x^{a^y0})^{b^y1} + w_y ]
  // where b^x1 a^y0 = a^y0 b^x1 z and z = sum_{i<x1} ([a^y0,b]^-1)^{b^i}.
  Tail neg_u = comm_apow_b(y[kA]);
  for (auto& v : neg_u) v = -v;
  Tail acc = b_geometric(neg_u, x[kB]);
  add_into(acc, conj_a(tail_of(x), y[kA]));
  acc = conj_b(acc, y[kB]);
  add_into(acc, tail_of(y));

  NfElement r;
  r[kA] = x[kA] + y[kA];
  r[kB] = x[kB] + y[kB];
  for (std::size_t i = 0; i < acc.size(); ++i) r[kC + i] = acc[i];
  return r;
}

inline NfElement inv(const NfElement& x) {
  // (a^x0 b^x1 w)^-1 = w^-1 b^-x1 a^-x0
  NfElement w;
  for (std::size_t i = kC; i < kBasisSize; ++i) w[i] = -x[i];
  return mul(mul(w, NfElement::generator(kB, -x[kB])), NfElement::generator(kA, -x[kA]));
}

inline NfElement pow(const NfElement& x, const Int& n) {
  NfElement base = n < 0 ? inv(x) : x;
  Int k = n < 0 ? Int(-n) : n;
  NfElement r;
  while (k != 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, base);
    k >>= 1;
    if (k != 0) base = mul(base, base);
  }
  return r;
}

inline NfElement comm(const NfElement& x, const NfElement& y) {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

inline bool in_gamma3(const NfElement& x) { return x[kA] == 0 && x[kB] == 0 && x[kC] == 0; }

// Coordinates of x in the free abelian group gamma_3/gamma_5 with basis
// [a,b,a], [a,b,b], [a,b,a,a], [a,b,b,a], [a,b,b,b].
inline std::array<Int, 5> gamma3_projection(const NfElement& x) {
  if (!in_gamma3(x)) throw NotInGamma3("element has nonzero weight-1 or weight-2 exponents");
  return {x[kCA], x[kCB], x[kCAA], x[kCBA], x[kCBB]};
}

inline std::string to_string(const NfElement& x) {
  std::string out;
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += kBasisName[i];
    if (x[i] != 1) out += "^" + x[i].get_str();
  }
  return out.empty() ? "1" : out;
}

inline std::ostream& operator<<(std::ostream& os, const NfElement& x) { return os << to_string(x); }

}  // namespace nilmult
