#include "nilmult/theory.hpp"

#include <gtest/gtest.h>

using namespace nilmult;

namespace {

GroupParams P(long p, unsigned long a, unsigned long b, unsigned long g, unsigned long r,
              unsigned long s) {
  return {p, a, b, g, r, s};
}

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<GroupParams> sweep(unsigned long max_exp, std::initializer_list<long> primes = {2, 3, 5}) {
  std::vector<GroupParams> out;
  for (long p : primes)
    for (unsigned long al = 1; al <= max_exp; ++al)
      for (unsigned long be = 1; be <= al; ++be)
        for (unsigned long ga = 1; ga <= be; ++ga)
          for (unsigned long rh = 0; rh <= ga; ++rh)
            for (unsigned long si = 0; si <= ga; ++si) out.push_back(P(p, al, be, ga, rh, si));
  return out;
}

std::string label_of(const GroupParams& g) {
  const auto l = canonicalize(g).label;
  return l ? label_name(*l) : "none";
}

// Ground truth for capability: no central element of order p lies in Z_2^*(G).
bool capable_by_search(const GroupParams& g) { return epicenter_elements(g).empty(); }

}  // namespace

TEST(Validate, Examples) {
  EXPECT_NO_THROW(validate(P(3, 2, 1, 1, 0, 1)));
  EXPECT_THROW(validate(P(3, 1, 2, 1, 0, 0)), InadmissibleParams);
  EXPECT_THROW(validate(P(2, 2, 2, 2, 3, 0)), InadmissibleParams);
  EXPECT_THROW(validate(P(4, 1, 1, 1, 0, 0)), InadmissibleParams);
  EXPECT_THROW(validate(P(3, 1, 1, 0, 0, 0)), InadmissibleParams);
  try {
    validate(P(3, 1, 2, 1, 0, 0));
  } catch (const InadmissibleParams& e) {
    EXPECT_NE(std::string(e.what()).find("alpha >= beta"), std::string::npos);
  }
}

TEST(Canonicalize, Examples) {
  auto c = canonicalize(P(3, 2, 2, 1, 1, 0));
  EXPECT_EQ(c.canonical, P(3, 2, 2, 1, 0, 1));
  EXPECT_EQ(c.family, Family::f2);
  c = canonicalize(P(2, 2, 2, 2, 2, 1));
  EXPECT_EQ(c.canonical, P(2, 2, 2, 2, 2, 2));
  EXPECT_EQ(c.family, Family::f3c);
  c = canonicalize(P(3, 3, 1, 1, 1, 0));
  EXPECT_EQ(c.canonical, P(3, 3, 1, 1, 1, 0));
  EXPECT_EQ(c.family, Family::f1b);
  EXPECT_EQ(canonicalize(P(3, 2, 1, 1, 0, 0)).canonical, P(3, 2, 1, 1, 0, 1));  // 1a
  EXPECT_EQ(canonicalize(P(3, 3, 1, 1, 1, 0)).family, Family::f1b);
  EXPECT_EQ(canonicalize(P(3, 4, 2, 2, 1, 0)).family, Family::f1c);
  EXPECT_EQ(canonicalize(P(2, 3, 3, 3, 0, 3)).family, Family::f3a);
  EXPECT_EQ(canonicalize(P(2, 2, 2, 2, 1, 1)).family, Family::f3b);
}

TEST(Canonicalize, IdempotentAndAdmissible) {
  for (const auto& g : sweep(4)) {
    const auto c = canonicalize(g);
    ASSERT_TRUE(admissible(c.canonical)) << g;
    ASSERT_EQ(canonicalize(c.canonical).canonical, c.canonical) << g;
    ASSERT_EQ(canonicalize(c.canonical).family, c.family) << g;
  }
}

TEST(Identify, Examples) {
  EXPECT_EQ(label_of(P(3, 2, 1, 1, 1, 1)), "K2");
  EXPECT_EQ(label_of(P(3, 2, 2, 2, 2, 2)), "G1");
  EXPECT_EQ(label_of(P(2, 3, 1, 1, 1, 1)), "K8");
  EXPECT_EQ(label_of(P(3, 3, 2, 2, 2, 1)), "G3");
  EXPECT_EQ(label_of(P(2, 2, 2, 1, 1, 1)), "G6");
  EXPECT_EQ(label_of(P(2, 2, 2, 2, 1, 1)), "K14");
}

// Tuples the named catalogue does not reach, and the K12/K13 overlap.
TEST(Identify, CatalogueEdges) {
  EXPECT_EQ(label_of(P(3, 1, 1, 1, 0, 1)), "none");
  EXPECT_EQ(label_of(P(3, 3, 1, 1, 1, 0)), "none");
  EXPECT_EQ(label_of(P(2, 2, 1, 1, 1, 0)), "none");
  EXPECT_EQ(matching_labels(P(2, 3, 3, 3, 0, 3)), (std::vector<Label>{Label::K12, Label::K13}));
  EXPECT_EQ(label_of(P(2, 3, 3, 3, 0, 3)), "K12");
}

TEST(Capability, Examples) {
  EXPECT_TRUE(is_capable(P(3, 2, 2, 2, 2, 2)));
  EXPECT_FALSE(is_capable(P(3, 2, 1, 1, 0, 1)));
  EXPECT_TRUE(is_capable(P(2, 2, 1, 1, 1, 1)));
  EXPECT_TRUE(is_2_capable(P(3, 3, 2, 2, 2, 1)));
  EXPECT_TRUE(is_2_capable(P(2, 2, 2, 1, 1, 1)));
  EXPECT_FALSE(is_2_capable(P(2, 3, 1, 1, 1, 1)));
  EXPECT_THROW(is_capable(P(3, 1, 2, 1, 0, 0)), InadmissibleParams);
}

TEST(Capability, AgreesWithEpicenterSearch) {
  for (const auto& g : sweep(3)) {
    if (group_order(g) > 729) continue;
    ASSERT_EQ(is_capable(g), capable_by_search(canonical_params(g))) << g;
  }
}

TEST(Capability, CanonicalFormPreservesMultiplier) {
  for (const auto& g : sweep(3))
    ASSERT_EQ(multiplier_of(g), multiplier_of(canonical_params(g))) << g;
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_multiplier(P(3, 2, 2, 1, 1, 1))->divisors, ints({3, 3, 3, 9, 9}));
  EXPECT_EQ(closed_form_multiplier(P(3, 1, 1, 1, 1, 1))->divisors, ints({3, 3, 3, 3, 3}));
  EXPECT_EQ(closed_form_multiplier(P(3, 3, 2, 2, 2, 1))->divisors, ints({3, 3, 3, 9, 27}));
  EXPECT_FALSE(closed_form_multiplier(P(2, 1, 1, 1, 1, 1)));
  EXPECT_FALSE(closed_form_multiplier(P(3, 1, 1, 1, 0, 1)));
}

// K4: Z_(p^(rho-sigma+beta)) + Z_(p^beta) + Z_(p^sigma)^3
TEST(ClosedForm, K4) {
  const auto g = P(5, 4, 2, 2, 1, 0);
  ASSERT_EQ(label_of(g), "K4");
  EXPECT_EQ(closed_form_multiplier(g)->divisors, ints({25, 125}));
  EXPECT_EQ(multiplier_of(g), *closed_form_multiplier(g));
}

// The stated K8 formula at beta = 1 and what the oracle computes.
TEST(ClosedForm, K8AsPrinted) {
  const auto g = P(2, 3, 1, 1, 1, 1);
  EXPECT_EQ(closed_form_multiplier(g)->divisors, ints({2, 4}));
  EXPECT_EQ(multiplier_of(g).divisors, ints({2, 4, 4}));
  // same as the capable quotient by a^4
  EXPECT_EQ(multiplier_of(g), multiplier_of(P(2, 2, 1, 1, 1, 1)));
}

TEST(Epicenter, WitnessExamples) {
  EXPECT_FALSE(epicenter_witness(P(3, 1, 1, 1, 1, 1)));
  EXPECT_EQ(epicenter_witness(P(3, 2, 1, 1, 0, 1)), (GroupElement{3, 0, 0}));
  EXPECT_EQ(epicenter_witness(P(2, 3, 1, 1, 1, 1)), (GroupElement{4, 0, 0}));
  EXPECT_THROW(epicenter_witness(P(2, 2, 2, 2, 1, 1)), Error);
  EXPECT_THROW(epicenter_witness(P(3, 1, 1, 1, 0, 1)), Error);
}

TEST(Epicenter, MembershipExamples) {
  const auto k1 = P(3, 2, 1, 1, 0, 1);
  EXPECT_TRUE(epicenter_membership(k1, GroupElement{3, 0, 0}));
  const auto g1 = P(3, 1, 1, 1, 1, 1);
  EXPECT_FALSE(epicenter_membership(g1, GroupElement{0, 0, 1}));
  EXPECT_EQ(two_nilpotent_multiplier(quotient_presentation(g1, GroupElement{0, 0, 1})).divisors,
            ints({3, 3}));
  EXPECT_TRUE(epicenter_membership(g1, GroupElement{}));
  EXPECT_THROW(epicenter_membership(k1, GroupElement{1, 0, 0}), NotCentral);
}

TEST(Epicenter, WitnessesAreMembers) {
  for (const auto& g : sweep(3)) {
    const auto c = canonicalize(g);
    if (is_capable(g) || !c.label || *c.label == Label::K14) continue;
    const auto w = epicenter_witness(g);
    ASSERT_TRUE(w && !w->is_identity()) << g;
    ASSERT_TRUE(epicenter_membership(c.canonical, *w)) << g << " witness " << *w;
  }
}

TEST(Epicenter, StrictDrop) {
  const auto g1 = P(3, 2, 2, 2, 2, 2);
  const Int whole = multiplier_of(g1).order();
  for (unsigned long s = 1; s < g1.alpha; ++s) {
    const GroupElement d = g_pow(g1, gen_c(g1), ipow(g1.p, s));
    EXPECT_GT(whole, two_nilpotent_multiplier(quotient_presentation(g1, d)).order()) << s;
  }
}

// |a^(i p^(beta+k)) b^(j p^(beta+k))| = p^(alpha-beta-k) for units i, j
TEST(Orders, CapableG3Type) {
  int checked = 0;
  for (const auto& g : sweep(4, {3, 5})) {
    const auto c = canonicalize(g);
    if (c.label != Label::G3 || !(c.canonical == g)) continue;
    for (unsigned long k = 0; g.beta + k < g.alpha; ++k)
      for (long i = 1; i < g.p; ++i)
        for (long j = 1; j < g.p; ++j) {
          const Int e = ipow(g.p, g.beta + k);
          const GroupElement d = g_mul(g, g_pow(g, gen_a(g), i * e), g_pow(g, gen_b(g), j * e));
          ASSERT_EQ(element_order(g, d), ipow(g.p, g.alpha - g.beta - k)) << g << " k=" << k;
          ++checked;
        }
  }
  EXPECT_GT(checked, 0);
}
