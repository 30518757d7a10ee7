#include "nilmult/groups.hpp"
#include "nilmult/oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace nilmult;

namespace {

GroupParams P(long p, unsigned long a, unsigned long b, unsigned long g, unsigned long r,
              unsigned long s) {
  return {p, a, b, g, r, s};
}

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

Presentation from_text(const std::string& text) {
  std::istringstream in(text);
  return {0, parse_relators(in)};
}

std::vector<GroupParams> sweep(unsigned long max_exp) {
  std::vector<GroupParams> out;
  for (long p : {2, 3, 5})
    for (unsigned long al = 1; al <= max_exp; ++al)
      for (unsigned long be = 1; be <= al; ++be)
        for (unsigned long ga = 1; ga <= be; ++ga)
          for (unsigned long rh = 0; rh <= ga; ++rh)
            for (unsigned long si = 0; si <= ga; ++si) out.push_back(P(p, al, be, ga, rh, si));
  return out;
}

}  // namespace

TEST(PresentationRelators, Examples) {
  std::vector<std::string> words;
  for (const auto& w : presentation_relators(P(3, 1, 1, 1, 1, 1)).relators)
    words.push_back(to_string(w));
  EXPECT_EQ(words, (std::vector<std::string>{"[a,b]^3", "[[a,b],a]", "[[a,b],b]", "a^3 [a,b]^-3",
                                             "b^3 [a,b]^-3"}));
  EXPECT_EQ(to_string(presentation_relators(P(2, 3, 1, 1, 1, 1)).relators[3]), "a^8 [a,b]^-2");
  EXPECT_THROW(presentation_relators(P(3, 1, 1, 2, 0, 0)), InadmissibleParams);
  EXPECT_THROW(presentation_relators(P(9, 1, 1, 1, 0, 0)), InadmissibleParams);
}

TEST(Multiplier, Examples) {
  EXPECT_EQ(multiplier_of(P(3, 1, 1, 1, 1, 1)).divisors, ints({3, 3, 3, 3, 3}));
  EXPECT_EQ(multiplier_of(P(3, 2, 1, 1, 1, 1)).divisors, ints({3, 3, 3, 3, 3}));
  EXPECT_EQ(multiplier_of(P(3, 3, 2, 2, 2, 1)).divisors, ints({3, 3, 3, 9, 27}));
  EXPECT_EQ(multiplier_of(P(3, 2, 1, 1, 0, 1)).divisors, ints({3, 3}));
  EXPECT_EQ(multiplier_of(P(3, 2, 2, 1, 1, 1)).divisors, ints({3, 3, 3, 9, 9}));
}

// Values with no closed form, pinned after checking them by hand collection
// and by the quotient criterion.
TEST(Multiplier, Snapshots) {
  EXPECT_EQ(multiplier_of(P(2, 1, 1, 1, 1, 1)).divisors, ints({2, 4}));
  EXPECT_EQ(multiplier_of(P(2, 2, 1, 1, 1, 1)).divisors, ints({2, 4, 4}));
  EXPECT_EQ(multiplier_of(P(2, 3, 1, 1, 1, 1)).divisors, ints({2, 4, 4}));
  EXPECT_EQ(multiplier_of(P(2, 1, 1, 1, 0, 0)).divisors, ints({2, 2}));
}

TEST(Multiplier, RelatorFile) {
  EXPECT_EQ(two_nilpotent_multiplier(from_text("# G1\n[a,b]^3\n[a,b,a]\n[a,b,b]\na^3\nb^3\n")).divisors,
            ints({3, 3, 3, 3, 3}));
  // relators may be given in any equivalent form
  EXPECT_EQ(two_nilpotent_multiplier(from_text("[b,a]^3\n[a,b,a]^-1\n[b,[a,b]]\n(a^-1)^3\nb^3\n")),
            multiplier_of(P(3, 1, 1, 1, 1, 1)));
  // elementary abelian of rank 2: one Z_2 per basic commutator of weight 3
  EXPECT_EQ(two_nilpotent_multiplier(from_text("a^2\nb^2\n[a,b]\n[a,b,a]\n[a,b,b]")).divisors,
            ints({2, 2}));
}

TEST(Multiplier, NotClassTwo) {
  EXPECT_THROW(two_nilpotent_multiplier(from_text("a^3\nb^3\n[a,b]^3\n[a,b,a]\n")), NotClassTwo);
  EXPECT_THROW(two_nilpotent_multiplier(from_text("a^3\nb^3\n")), NotClassTwo);
  // [a,b,a][a,b,b] and [a,b,b] together do generate
  EXPECT_NO_THROW(two_nilpotent_multiplier(from_text("a^3\nb^3\n[a,b]^3\n[a,b,a][a,b,b]\n[a,b,b]")));
}

TEST(Multiplier, InfiniteQuotient) {
  EXPECT_THROW(two_nilpotent_multiplier(from_text("[a,b,a]\n[a,b,b]")), InfiniteQuotient);
}

TEST(Multiplier, FiniteAndPrimary) {
  for (const auto& g : sweep(3)) {
    AbelianInvariants m;
    ASSERT_NO_THROW(m = multiplier_of(g)) << g;
    for (const auto& d : m.divisors) {
      Int r = d;
      while (mpz_divisible_p(r.get_mpz_t(), g.p.get_mpz_t())) r /= g.p;
      ASSERT_EQ(r, 1) << g << " has divisor " << d;
    }
  }
}

TEST(Multiplier, QuotientMonotone) {
  for (const auto& g : sweep(2)) {
    const Int whole = multiplier_of(g).order();
    for (const auto& d : central_elements(g)) {
      const Int part = two_nilpotent_multiplier(quotient_presentation(g, d)).order();
      ASSERT_LE(part, whole) << g << " / " << d;
    }
    EXPECT_EQ(two_nilpotent_multiplier(quotient_presentation(g, GroupElement{})), multiplier_of(g));
  }
}

TEST(Multiplier, QuotientExamples) {
  // K1 / <a^3> is G2 with parameters (beta, beta, rho)
  const auto k1 = P(3, 2, 1, 1, 0, 1);
  EXPECT_EQ(two_nilpotent_multiplier(quotient_presentation(k1, GroupElement{3, 0, 0})),
            multiplier_of(k1));
  // b^(p^alpha) = 1 in this G3, so the quotient is G3 itself
  const auto g3 = P(3, 3, 2, 2, 2, 1);
  const GroupElement d = g_pow(g3, gen_b(g3), g3.pa());
  EXPECT_TRUE(d.is_identity());
  EXPECT_EQ(two_nilpotent_multiplier(quotient_presentation(g3, d)).divisors,
            ints({3, 3, 3, 9, 27}));
}
