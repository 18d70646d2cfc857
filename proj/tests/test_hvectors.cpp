#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "apolar/hvectors.hpp"

using namespace apolar;

namespace {

/// Growth of the quotient by a lex-segment ideal: keep the n smallest degree-d
/// monomials and count degree-(d+1) monomials whose divisors are all kept.
std::size_t lex_growth_oracle(std::size_t n, unsigned d) {
  if (n == 0) return 0;
  std::size_t vars = 1;
  while (binomial(vars + d - 1, d) < n) ++vars;
  const auto fd = frame(vars, d);
  std::set<Monomial> seg(fd.monomials().end() - static_cast<std::ptrdiff_t>(n), fd.monomials().end());
  std::size_t count = 0;
  for (const auto& mono : frame(vars, d + 1)) {
    bool ok = true;
    for (std::size_t i = 0; i < vars && ok; ++i)
      if (mono[i] > 0 && !seg.count(mono / Monomial::variable(vars, i))) ok = false;
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Hvectors, MacaulayGrowthExamples) {
  EXPECT_EQ(macaulay_growth(8, 2), 13u);
  EXPECT_EQ(macaulay_growth(0, 2), 0u);
  EXPECT_EQ(macaulay_growth(5, 2), 7u);
  EXPECT_EQ(macaulay_growth(12, 2), 23u);
  EXPECT_EQ(macaulay_growth(3, 1), 6u);
}

TEST(Hvectors, MacaulayRepresentationIsGreedy) {
  for (std::size_t n = 1; n <= 60; ++n)
    for (unsigned d = 1; d <= 4; ++d) {
      const auto rep = macaulay_representation(n, d);
      std::size_t sum = 0, prev_k = std::numeric_limits<std::size_t>::max();
      for (auto [k, j] : rep.terms) {
        EXPECT_LT(k, prev_k);
        EXPECT_GE(k, j);
        prev_k = k;
        sum += binomial(k, j);
      }
      EXPECT_EQ(sum, n);
    }
}

TEST(Hvectors, MacaulayGrowthMatchesLexOracle) {
  for (std::size_t n = 0; n <= 30; ++n)
    for (unsigned d = 1; d <= 3; ++d) EXPECT_EQ(macaulay_growth(n, d), lex_growth_oracle(n, d)) << n << " " << d;
}

TEST(Hvectors, OSequence) {
  EXPECT_FALSE(is_o_sequence(std::vector<std::size_t>{1, 2, 4}));
  EXPECT_TRUE(is_o_sequence(std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(is_o_sequence(HVector{1, 13, 12, 13}));
  EXPECT_TRUE(is_o_sequence(HVector{1, 40}));
}

TEST(Hvectors, Admissibility) {
  EXPECT_TRUE(is_admissible_level_local(HVector{1, 3, 2, 1}));
  EXPECT_TRUE(is_admissible_level_local(HVector{1, 4, 5, 6}));
  EXPECT_TRUE(is_admissible_level_local(HVector{1, 5}));
  EXPECT_TRUE(is_admissible_level_local(HVector{1, 2, 3}));
  EXPECT_FALSE(is_admissible_level_local(HVector{1, 2, 4}));
  EXPECT_EQ(admissibility_violation(HVector{1, 2, 7, 1}), std::optional<std::string>("n > binom(m+1,2)"));
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t tau = 1; tau <= 4; ++tau) {
      const std::size_t n = tau * m + 1;
      if (n > binomial(m + 1, 2)) continue;
      EXPECT_FALSE(is_admissible_level_local(HVector{1, m, n, tau}));
    }
  EXPECT_THROW(is_admissible_level_local(HVector{1, 2, 2, 2, 1}), Unsupported);
}

TEST(Hvectors, DispatchExamples) {
  EXPECT_EQ(dispatch_tag(HVector{1, 3, 6, 2}), ConstructionTag::proamm1_a);
  EXPECT_EQ(dispatch_tag(HVector{1, 15, 14, 14}), ConstructionTag::prop1);
  EXPECT_EQ(dispatch_tag(HVector{1, 4, 5, 6}), ConstructionTag::proamm3_hpos);
  EXPECT_EQ(dispatch_tag(HVector{1, 3, 3, 4}), ConstructionTag::proamm3_h0);
  EXPECT_EQ(dispatch_tag(HVector{1, 1, 1, 1}), ConstructionTag::proamm1_b);
  EXPECT_THROW(dispatch_tag(HVector{1, 2, 7, 1}), Inadmissible);
}

TEST(Hvectors, ConstructProamm1CaseA) {
  const auto rep = construct(HVector{1, 3, 6, 2});
  ASSERT_EQ(rep.generators.size(), 2u);
  EXPECT_EQ(rep.generators[0], parse("x1^3 + x2^3 + x3^3", 3));
  EXPECT_EQ(rep.generators[1], parse("x1^2*x2 + x2^2*x3 + x3^2*x1", 3));
  EXPECT_TRUE(rep.homogeneous);
}

TEST(Hvectors, ConstructEs1HVector) {
  const auto rep = construct(HVector{1, 4, 5, 6});
  EXPECT_EQ(rep.verified_hvector, (HVector{1, 4, 5, 6}));
  EXPECT_TRUE(rep.verified_level);
  EXPECT_EQ(rep.verified_type, 6u);
}

TEST(Hvectors, ConstructEs3HVector) {
  const auto rep = construct(HVector{1, 15, 14, 14});
  EXPECT_EQ(rep.tag, ConstructionTag::prop1);
  EXPECT_EQ(rep.verified_hvector, (HVector{1, 15, 14, 14}));
  EXPECT_FALSE(rep.homogeneous);
}

TEST(Hvectors, ConstructRejectsInadmissible) {
  try {
    construct(HVector{1, 2, 7, 1});
    FAIL();
  } catch (const Inadmissible& e) {
    EXPECT_STREQ(e.what(), "n > binom(m+1,2)");
  }
  EXPECT_THROW(construct(HVector{1, 2, 3, 4, 5}), Unsupported);
}

TEST(Hvectors, SweepSocleThree) {
  std::size_t count = 0;
  for (std::size_t m = 1; m <= 5; ++m)
    for (const auto& e : enumerate_admissible(m, 3)) {
      const auto rep = construct(e.h);
      EXPECT_EQ(rep.verified_hvector, e.h);
      EXPECT_TRUE(rep.verified_level);
      EXPECT_EQ(rep.tag, e.tag);
      const bool syntactic = std::all_of(rep.generators.begin(), rep.generators.end(),
                                         [](const Poly& g) { return g.is_homogeneous(); });
      EXPECT_EQ(rep.homogeneous, syntactic);
      if (rep.tag >= ConstructionTag::proamm1_a && rep.tag <= ConstructionTag::proamm1_d) {
        EXPECT_TRUE(rep.homogeneous);
      }
      ++count;
    }
  EXPECT_GT(count, 100u);
}

TEST(Hvectors, SweepSocleTwo) {
  for (std::size_t m = 1; m <= 6; ++m)
    for (const auto& e : enumerate_admissible(m, 2)) {
      const auto rep = construct(e.h);
      EXPECT_EQ(rep.verified_hvector, e.h);
      EXPECT_TRUE(rep.verified_level);
    }
}

TEST(Hvectors, LaddersAreDisjoint) {
  for (std::size_t m = 1; m <= 12; ++m) {
    std::set<Monomial> seen;
    for (std::size_t j = 0; j < m; ++j) {
      const auto d = detail::ladder_monomials(m, j);
      EXPECT_EQ(std::set<Monomial>(d.begin(), d.end()).size(), m);
      for (const auto& mono : d) EXPECT_TRUE(seen.insert(mono).second) << "m=" << m << " j=" << j;
    }
  }
}

TEST(Hvectors, Enumerate) {
  const auto one = enumerate_admissible(1, 3);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].h, (HVector{1, 1, 1, 1}));
  EXPECT_EQ(enumerate_admissible(2, 2).size(), 3u);
  for (const auto& e : enumerate_admissible(3, 3, 1)) EXPECT_LE(e.h[2], 3u);
  const auto t2 = enumerate_admissible(3, 3, 2);
  std::vector<std::size_t> ns;
  for (const auto& e : t2) ns.push_back(e.h[2]);
  EXPECT_EQ(ns, (std::vector<std::size_t>{2, 3, 4, 5, 6}));
  bool noted = false;
  for (const auto& e : enumerate_admissible(3, 3))
    if (e.h == HVector{1, 3, 2, 1}) noted = !e.note.empty();
  EXPECT_TRUE(noted);
}
