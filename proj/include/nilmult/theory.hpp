#pragma once

// Classification layer for two-generator p-groups of class two: canonical
// tuples, named families G1-G7 (capable) and K1-K14 (noncapable),
// capability tests, closed multiplier formulas and 2-epicenter witnesses.

#include "nilmult/bigint.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/groups.hpp"
#include "nilmult/lattice.hpp"
#include "nilmult/oracle.hpp"
#include "nilmult/params.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilmult {

enum class Family { f1a, f1b, f1c, f2, f3a, f3b, f3c };

inline std::string_view family_name(Family f) {
  static constexpr std::array<std::string_view, 7> names = {"1a", "1b", "1c", "2",
                                                            "3a", "3b", "3c"};
  return names[static_cast<int>(f)];
}

enum class Label { G1, G2, G3, G4, G5, G6, G7, K1, K2, K3, K4, K5, K6, K7, K8, K9, K10, K11, K12, K13, K14 };

inline constexpr std::array<Label, 21> kAllLabels = {
    Label::G1, Label::G2, Label::G3, Label::G4,  Label::G5,  Label::G6,  Label::G7,
    Label::K1, Label::K2, Label::K3, Label::K4,  Label::K5,  Label::K6,  Label::K7,
    Label::K8, Label::K9, Label::K10, Label::K11, Label::K12, Label::K13, Label::K14};

inline std::string label_name(Label l) {
  const int i = static_cast<int>(l);
  return i < 7 ? "G" + std::to_string(i + 1) : "K" + std::to_string(i - 6);
}

inline bool is_capable_label(Label l) { return static_cast<int>(l) < 7; }

struct Classification {
  GroupParams canonical;
  Family family = Family::f1a;
  std::optional<Label> label;
};

namespace detail {

inline bool odd(const GroupParams& g) { return g.p != 2; }

inline Family family_of(const GroupParams& g) {
  const auto [al, be, ga, rh, si] = g.tuple();
  if (al > be) {
    if (rh <= si) return Family::f1a;
    if (si + al - be <= rh || rh == ga) return Family::f1b;
    return Family::f1c;
  }
  if (be > ga || odd(g)) return Family::f2;
  const auto lo = std::min(rh, si);
  if (lo + 1 < ga) return Family::f3a;
  if (rh + 1 == ga && si + 1 == ga) return Family::f3b;
  return Family::f3c;
}

// Presentation conditions of each named group, read off a canonical tuple.
// Integer differences are taken signed.
inline bool label_matches(Label l, const GroupParams& g) {
  const long al = static_cast<long>(g.alpha), be = static_cast<long>(g.beta),
             ga = static_cast<long>(g.gamma), rh = static_cast<long>(g.rho),
             si = static_cast<long>(g.sigma);
  const bool p_odd = odd(g);
  const long delta = be == ga ? 1 : 0;
  switch (l) {
    case Label::G1: return p_odd && al == be && be == ga && rh == ga && si == ga;
    case Label::G2: return p_odd && al == be && al > ga && rh == ga && si == ga;
    case Label::G3: return p_odd && rh == ga && al - be == ga - si && si < ga;
    case Label::G4: return !p_odd && al == be && be == ga && rh == ga && si == ga;
    case Label::G5: return !p_odd && al == be + 1 && be == ga && rh == ga && si == ga;
    case Label::G6: return !p_odd && al == be && al > ga && rh == ga && si == ga;
    case Label::G7:
      return !p_odd && rh == ga && al - be > delta && al - be == ga - si && al > be && ga > si;
    case Label::K1: return p_odd && si == ga && al > be && rh < ga;
    case Label::K2: return p_odd && rh == ga && si == ga && al > be;
    case Label::K3: return p_odd && rh == ga && al > be && si + al - be < ga;
    case Label::K4: return p_odd && al > be && si < rh && rh < std::min(ga, si + al - be);
    case Label::K5: return p_odd && al == be && si == ga && al > ga && ga > rh;
    case Label::K6: return !p_odd && si == ga && al > be && rh < ga;
    case Label::K7: return !p_odd && rh == ga && si == ga && al > be && be > ga;
    case Label::K8: return !p_odd && ga == be && rh == ga && si == ga && al > be + 1;
    case Label::K9: return !p_odd && rh == ga && si + al - be < ga;
    case Label::K10: return !p_odd && si < rh && rh < std::min(ga, si + al - be);
    case Label::K11: return !p_odd && al == be && si == ga && al > ga && ga > rh;
    case Label::K12: return !p_odd && al == be && ga == al && si == ga && al > rh;
    case Label::K13: return !p_odd && al == be && ga == be && si == ga && be - 1 > rh;
    case Label::K14: return !p_odd && al == be && be == ga && rh == al - 1 && si == al - 1;
  }
  return false;
}

}  // namespace detail

inline GroupParams canonical_params(const GroupParams& g) {
  validate(g);
  GroupParams c = g;
  switch (detail::family_of(g)) {
    case Family::f1a: c.sigma = g.gamma; break;
    case Family::f1b: c.rho = g.gamma; break;
    case Family::f1c: break;
    case Family::f2:
    case Family::f3a:
      c.rho = std::min(g.rho, g.sigma);
      c.sigma = g.gamma;
      break;
    case Family::f3b: break;
    case Family::f3c: c.rho = c.sigma = g.gamma; break;
  }
  return c;
}

// Every named group whose presentation conditions the canonical tuple meets,
// in catalogue order. A well-formed catalogue yields exactly one.
inline std::vector<Label> matching_labels(const GroupParams& canonical) {
  std::vector<Label> out;
  for (Label l : kAllLabels)
    if (detail::label_matches(l, canonical)) out.push_back(l);
  return out;
}

inline std::optional<Label> identify(const Classification& c) {
  auto labels = matching_labels(c.canonical);
  if (labels.empty()) return std::nullopt;
  return labels.front();
}

inline Classification canonicalize(const GroupParams& g) {
  Classification c;
  c.canonical = canonical_params(g);
  c.family = detail::family_of(c.canonical);
  c.label = identify(c);
  return c;
}

// Capability criterion on the canonical tuple:
//   p odd: alpha - beta = rho - sigma and rho = gamma;
//   p = 2: (i)   rho <= sigma, alpha = beta, rho = gamma;
//          (ii)  alpha - beta = rho - sigma > delta(beta,gamma), rho = gamma;
//          (iii) rho = sigma = gamma = beta, alpha = gamma + 1.
inline bool is_capable(const GroupParams& g) {
  const GroupParams c = canonical_params(g);
  const long al = static_cast<long>(c.alpha), be = static_cast<long>(c.beta),
             ga = static_cast<long>(c.gamma), rh = static_cast<long>(c.rho),
             si = static_cast<long>(c.sigma);
  if (detail::odd(c)) return al - be == rh - si && rh == ga;
  const long delta = be == ga ? 1 : 0;
  if (rh <= si && al == be && rh == ga) return true;
  if (al - be == rh - si && al - be > delta && rh == ga) return true;
  return rh == si && si == ga && ga == be && al == ga + 1;
}

// Membership of the canonical tuple in the list of 2-capable groups G1-G7.
inline bool is_2_capable(const GroupParams& g) {
  const GroupParams c = canonical_params(g);
  for (Label l : {Label::G1, Label::G2, Label::G3, Label::G4, Label::G5, Label::G6, Label::G7})
    if (detail::label_matches(l, c)) return true;
  return false;
}

namespace detail {

inline AbelianInvariants cyclic_sum(const Int& p,
                                    std::initializer_list<std::pair<long, int>> parts) {
  std::vector<Int> orders;
  for (const auto& [exp, copies] : parts)
    for (int i = 0; i < copies; ++i) orders.push_back(ipow(p, static_cast<unsigned long>(exp)));
  return AbelianInvariants::from_cyclic(orders);
}

}  // namespace detail

// Closed form of M^(2)(G) for the named groups that have one. G4-G7 and
// tuples outside the catalogue return nullopt.
inline std::optional<AbelianInvariants> closed_form_multiplier(const GroupParams& g) {
  const Classification c = canonicalize(g);
  if (!c.label) return std::nullopt;
  const GroupParams& t = c.canonical;
  const long al = static_cast<long>(t.alpha), be = static_cast<long>(t.beta),
             ga = static_cast<long>(t.gamma), rh = static_cast<long>(t.rho),
             si = static_cast<long>(t.sigma);
  using detail::cyclic_sum;
  switch (*c.label) {
    case Label::G1: return cyclic_sum(t.p, {{al, 5}});
    case Label::G2: return cyclic_sum(t.p, {{al, 2}, {ga, 3}});
    case Label::G3: return cyclic_sum(t.p, {{al, 1}, {be, 1}, {si, 3}});
    case Label::G4:
    case Label::G5:
    case Label::G6:
    case Label::G7: return std::nullopt;
    case Label::K1: return cyclic_sum(t.p, {{be, 2}, {rh, 3}});
    case Label::K2: return cyclic_sum(t.p, {{be, 2}, {ga, 3}});
    case Label::K3: return cyclic_sum(t.p, {{al, 1}, {be, 1}, {si, 3}});
    case Label::K4: return cyclic_sum(t.p, {{rh - si + be, 1}, {be, 1}, {si, 3}});
    case Label::K5: return cyclic_sum(t.p, {{al, 2}, {rh, 3}});
    case Label::K6: return cyclic_sum(t.p, {{be, 2}, {rh, 3}});
    case Label::K7: return cyclic_sum(t.p, {{be, 2}, {ga, 3}});
    case Label::K8: return cyclic_sum(t.p, {{be - 1, 3}, {be, 1}, {be + 1, 1}});
    case Label::K9: return cyclic_sum(t.p, {{al, 1}, {be, 1}, {si, 3}});
    case Label::K10: return cyclic_sum(t.p, {{rh - si + be, 1}, {be, 1}, {si, 3}});
    case Label::K11: return cyclic_sum(t.p, {{al, 2}, {rh, 3}});
    case Label::K12: return cyclic_sum(t.p, {{al, 2}, {rh, 3}});
    case Label::K13: return cyclic_sum(t.p, {{be, 2}, {rh, 3}});
    case Label::K14: return cyclic_sum(t.p, {{al, 2}, {al - 1, 3}});
  }
  return std::nullopt;
}

// N <= Z_2^*(G) exactly when M^(2)(G) and M^(2)(G/N) agree; for class two
// the natural map between them is onto, so comparing invariants suffices.
inline bool epicenter_membership(const GroupParams& g, const GroupElement& d) {
  validate(g);
  return multiplier_of(g) == two_nilpotent_multiplier(quotient_presentation(g, d));
}

// Central elements of order p lying in Z_2^*(G), found by testing each one.
inline std::vector<GroupElement> epicenter_elements(const GroupParams& g) {
  std::vector<GroupElement> out;
  for (const auto& d : central_elements(g))
    if (g_pow(g, d, g.p).is_identity() && epicenter_membership(g, d)) out.push_back(d);
  return out;
}

// Designated nontrivial element of Z_2^*(G), as an element of the canonical
// group; nullopt for capable groups. Noncapable labels use
//   b^(p^alpha) when a^(p^alpha) = 1, a^(p^beta) when b^(p^beta) = 1,
//   a^(p^alpha) when sigma < rho, and a^(2^(alpha-1)) for K8.
// Throws Error when none of these applies.
inline std::optional<GroupElement> epicenter_witness(const GroupParams& g) {
  const Classification c = canonicalize(g);
  const GroupParams& t = c.canonical;
  if (is_capable(t)) return std::nullopt;
  if (!c.label)
    throw Error("no catalogue entry for " + to_string(t) + "; no designated epicenter witness");

  const GroupElement a = gen_a(t), b = gen_b(t);
  std::optional<GroupElement> w;
  switch (*c.label) {
    case Label::K8: w = g_pow(t, a, ipow(t.p, t.alpha - 1)); break;
    // b^(p^beta) = 1
    case Label::K1:
    case Label::K2:
    case Label::K5:
    case Label::K6:
    case Label::K7:
    case Label::K11:
    case Label::K12:
    case Label::K13: w = g_pow(t, a, t.pb()); break;
    // a^(p^alpha) = 1
    case Label::K3:
    case Label::K9: w = g_pow(t, b, t.pa()); break;
    // sigma < rho
    case Label::K4:
    case Label::K10: w = g_pow(t, a, t.pa()); break;
    default: break;
  }
  if (!w || w->is_identity())
    throw Error("no designated epicenter witness for " + label_name(*c.label) + " at " +
                to_string(t));
  return w;
}

}  // namespace nilmult
