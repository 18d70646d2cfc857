#include <gtest/gtest.h>

#include "apolar/gradedness.hpp"
#include "random_systems.hpp"

using namespace apolar;
using namespace apolar::testing;

TEST(Gradedness, DeltaOfCube) {
  const auto d = delta(parse("x1^3", 2));
  EXPECT_EQ(d, (RationalMatrix{{6, 0, 0}, {0, 0, 0}}));
}

TEST(Gradedness, DeltaOfSquarefreeCubic) {
  const auto d = delta(parse("x1*x2*x3", 3));
  // Frame: x1^2, x1x2, x1x3, x2^2, x2x3, x3^2.
  EXPECT_EQ(d, (RationalMatrix{{0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}));
}

TEST(Gradedness, DeltaRejectsBadInput) {
  EXPECT_THROW(delta(Poly(2)), ContractViolation);
  EXPECT_THROW(delta(parse("x1^3 + x2", 2)), ContractViolation);
  EXPECT_THROW(delta(parse("x1^2", 2)), ContractViolation);
  EXPECT_THROW(delta2(parse("x1^4", 2)), ContractViolation);
}

TEST(Gradedness, TransposeIdentity) {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const Poly f = random_nonzero_form(rng, 1 + t % 4, 3);
    EXPECT_TRUE(transpose_check(f));
  }
  Poly q = parse("1/3*x1^3 - 5/7*x1*x2^2", 2);
  EXPECT_TRUE(transpose_check(q));
  EXPECT_EQ(delta(q)(0, 0), 2);
}

TEST(Gradedness, StackedRankIsDegreeTwoHilbertFunction) {
  std::mt19937 rng(19);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 2 + t % 3, tau = 1 + t % 3;
    std::vector<Poly> forms;
    for (std::size_t j = 0; j < tau; ++j) forms.push_back(random_nonzero_form(rng, m, 3));
    const auto is = build(forms, m);
    EXPECT_EQ(rank(stacked_delta(forms)), hilbert_function(is)[2]);
  }
}

TEST(Gradedness, Compressedness) {
  const VariableNames xy({"x", "y"});
  EXPECT_FALSE(is_compressed_s3(build({parse("x^3", xy), parse("y^3", xy)}, 2)));
  EXPECT_TRUE(is_compressed_s3(build({parse("x^3 + 3*x^2*y - 2*x*y^2 + 5*y^3", xy)}, 2)));
  EXPECT_THROW(is_compressed_s3(build({parse("x^2", xy)}, 2)), ContractViolation);
}

TEST(Gradedness, SystemWithZeroTails) {
  std::mt19937 rng(23);
  const auto inst = random_compressed(rng, 3, 2);
  const std::vector<Poly> zeros(2, Poly(3));
  const auto sys = build_automorphism_system(inst.forms, zeros);
  for (const auto& r : sys.rhs) EXPECT_EQ(r, 0);
  const auto sol = solve_left(sys.matrix, sys.rhs);
  ASSERT_TRUE(sol);
  for (const auto& a : *sol) EXPECT_EQ(a, 0);
}

TEST(Gradedness, OneVariable) {
  // x^3 + b x^2 with phi(x) = x + a x^2: <x^2, phi* x^3> = 12a must equal 2b.
  const Poly f = parse("x1^3 + 5*x1^2", 1);
  const auto sys = build_automorphism_system({parse("x1^3", 1)}, {parse("5*x1^2", 1)});
  EXPECT_EQ(sys.matrix, (RationalMatrix{{12}}));
  EXPECT_EQ(sys.rhs, (RationalVector{10}));
  const auto sol = solve_left(sys.matrix, sys.rhs);
  ASSERT_TRUE(sol);
  const AutomorphismCoeffs a{1, *sol};
  const auto back = apply_automorphism_dual(a, {f}, 3);
  EXPECT_TRUE(module_equal(build(back, 1), build({parse("x1^3", 1)}, 1)));
  EXPECT_EQ(apply_automorphism_dual_forward(a, {parse("x1^3", 1)}, 3)[0], f);
}

TEST(Gradedness, CompressedSystemsHaveIndependentEquations) {
  // One equation per (j, quadratic monomial); for compressed forms they are
  // all independent, so every choice of quadratic tails is reachable.
  std::mt19937 rng(29);
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2}, {3, 3}, {4, 3}};
  for (const auto& [m, tau] : shapes) {
    const auto inst = random_compressed(rng, m, tau);
    const auto sys = build_automorphism_system(inst.forms, inst.quads);
    EXPECT_EQ(rank(sys.matrix), tau * binomial(m + 1, 2));
    EXPECT_TRUE(solve_left(sys.matrix, sys.rhs).has_value());
  }
}

TEST(Gradedness, AutomorphismIdentityAndRoundTrip) {
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 2 + t % 2;
    std::vector<Poly> polys{random_poly(rng, m, 3), random_poly(rng, m, 2)};
    EXPECT_EQ(apply_automorphism_dual(AutomorphismCoeffs::zero(m), polys, 3), polys);
    AutomorphismCoeffs a = AutomorphismCoeffs::zero(m);
    std::uniform_int_distribution<int> c(-4, 4);
    for (auto& v : a.values) v = c(rng);
    const auto fwd = apply_automorphism_dual_forward(a, polys, 3);
    EXPECT_EQ(apply_automorphism_dual(a, fwd, 3), polys);
    // phi* maps R-submodules to R-submodules of the same length.
    EXPECT_EQ(build(fwd, m).length(), build(polys, m).length());
  }
}

TEST(Gradedness, CertifyGoldens) {
  const VariableNames xy({"x", "y"});
  const auto r1 = certify_graded_s3(build({parse("x^3", xy), parse("y^3", xy)}, 2));
  EXPECT_EQ(r1.verdict, GradedVerdict::graded);
  ASSERT_TRUE(r1.certificate);
  EXPECT_TRUE(r1.certificate->coeffs.is_zero());
  EXPECT_TRUE(r1.certificate->verified);

  const VariableNames n({"x", "y", "z", "t"});
  std::vector<Poly> g;
  for (const char* s : {"x^3 + t^2", "x^2*y", "x*y^2", "z^3", "x*z^2", "y^3"}) g.push_back(parse(s, n));
  const auto r2 = certify_graded_s3(build(g, 4));
  EXPECT_EQ(r2.verdict, GradedVerdict::not_graded);
  ASSERT_TRUE(r2.witness);
  EXPECT_EQ(r2.witness->hvector, (HVector{1, 4, 5, 6}));
  EXPECT_EQ(r2.witness->q0_hvector, (HVector{1, 3, 5, 6}));
}

TEST(Gradedness, CertifyCompressedRandom) {
  std::mt19937 rng(37);
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {3, 3}};
  for (int t = 0; t < 25; ++t) {
    const auto [m, tau] = shapes[t % 5];
    const auto inst = random_compressed(rng, m, tau);
    auto gens = inst.generators();
    gens[0] += random_form(rng, m, 1);  // linear tails are absorbed by the closure
    const auto is = build(gens, m);
    ASSERT_TRUE(is_level(is).level);
    ASSERT_TRUE(is_compressed_s3(is));
    EXPECT_EQ(hilbert_function(q0(is)), hilbert_function(is));
    const auto r = certify_graded_s3(is);
    EXPECT_EQ(r.verdict, GradedVerdict::graded) << r.reason;
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(r.certificate->verified);
    EXPECT_EQ(r.certificate->method, "direct-system");
    // Soundness: the inverse dual of the tails-free generators gives <F>.
    const auto back = apply_automorphism_dual(r.certificate->coeffs, strip_low_terms(is.generators()), 3);
    EXPECT_TRUE(module_equal(build(back, m), q0(is)));
  }
}

TEST(Gradedness, SaturatedCaseNeedsNoAutomorphism) {
  // n = binom(m+1,2) <= tau*m: the closure contains all of P_2.
  std::mt19937 rng(41);
  const auto inst = random_compressed(rng, 3, 2);
  const auto r = certify_graded_s3(build(inst.generators(), 3));
  EXPECT_EQ(r.verdict, GradedVerdict::graded);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(r.certificate->coeffs.is_zero());
}

TEST(Gradedness, AssessOtherCases) {
  const VariableNames xy({"x", "y"});
  EXPECT_EQ(assess_gradedness(build({parse("x^3", xy), parse("y", xy)}, 2)).status, GradedStatus::not_applicable);
  EXPECT_EQ(assess_gradedness(build({parse("x^2 + y^2 + x", xy)}, 2)).status, GradedStatus::graded);
  const Poly quartic = parse("x^4 + y^4 + x^3", xy);
  const auto a = assess_gradedness(build({quartic}, 2));
  EXPECT_NE(a.status, GradedStatus::not_applicable);
}
