#include <gtest/gtest.h>

#include <cmath>

#include "spinchain/errors.hpp"
#include "spinchain/laxfactory.hpp"

using namespace spinchain;

TEST(SpecialFunctions, Pochhammer) {
  EXPECT_EQ(pochhammer(3.0, 0), cplx(1.0));
  EXPECT_EQ(pochhammer(3.0, 3), cplx(60.0));
  EXPECT_LT(std::abs(pochhammer(cplx(0.5, 1.0), 2) - cplx(0.5, 1.0) * cplx(1.5, 1.0)), 1e-15);
}

TEST(SpecialFunctions, GammaAgreesWithStd) {
  for (double x : {0.3, 1.0, 2.5, 7.2, -0.5, -2.7}) EXPECT_NEAR(complex_gamma(x).real(), std::tgamma(x), 1e-12 * std::abs(std::tgamma(x)));
  // recurrence off the real axis
  const cplx z(0.4, 1.3);
  EXPECT_LT(std::abs(complex_gamma(z + 1.0) - z * complex_gamma(z)), 1e-13);
  EXPECT_THROW(complex_gamma(-2.0), PoleError);
  EXPECT_THROW(complex_gamma(0.0), PoleError);
}

TEST(R0, PolynomialOverRawIsConstantAcrossBlocks) {
  // rho_I depends on z only: polynomial / raw block values agree for all blocks
  Representation rep(HighestWeight({2, 1, 0}));
  const IndexSet I(3, {2});
  const auto t = shifted_weights(I, rep);
  for (cplx z : {cplx(0.37, 0.2), cplx(-1.3, 0.6)}) {
    const cplx ref = r0_block_value(z, t.blocks[0].ell, rep.weight()) /
                     r0_block_value(z, t.blocks[0].ell, rep.weight(), Normalization::Raw);
    for (const auto& b : t.blocks) {
      const cplx r = r0_block_value(z, b.ell, rep.weight()) / r0_block_value(z, b.ell, rep.weight(), Normalization::Raw);
      EXPECT_LT(std::abs(r / ref - 1.0), 1e-11);
    }
  }
}

TEST(R0, FundamentalGl2Values) {
  // gl(2) (1,0), I = {1}: Ibar = {2}, blocks ell = 0 (J^2_2 = 0) and ell = 1 (J^2_2 = 1)
  Representation rep(HighestWeight({1, 0}));
  const cplx z(0.3, 0.4);
  const CMatrix R = r0(z, IndexSet(2, {1}), rep).matrix();
  // w = z + 1/2; value (w - 1)_{1 - ell}
  EXPECT_LT(std::abs(R(0, 0) - (z - 0.5)), 1e-14);
  EXPECT_LT(std::abs(R(1, 1) - 1.0), 1e-14);
  EXPECT_LT(std::abs(R(0, 1)), 1e-14);
}

class BlockSweep : public ::testing::TestWithParam<std::vector<int>> {};

TEST_P(BlockSweep, BlockEquations) {
  Representation rep{HighestWeight(GetParam())};
  for (const auto& I : all_subsets(rep.n()))
    for (cplx z : {cplx(0.37, 0.21), cplx(-1.2, 0.8), cplx(2.3, -0.4)}) {
      const auto r = verify_block_equations(z, I, rep);
      for (double v : r) EXPECT_LT(v, 1e-9) << I.str();
    }
}

INSTANTIATE_TEST_SUITE_P(Lax, BlockSweep,
                         ::testing::Values(std::vector<int>{1, 0}, std::vector<int>{2, 0}, std::vector<int>{1, 1, 0},
                                           std::vector<int>{2, 1, 0}, std::vector<int>{2, 2, 1}));

TEST(DegenerateLax, ModesAndDegree) {
  Representation rep(HighestWeight({2, 1, 0}));
  DegenerateLax lax(IndexSet(3, {1, 3}), rep);
  ASSERT_EQ(lax.modes().size(), 2u);
  EXPECT_EQ(lax.modes()[0].c, 1);
  EXPECT_EQ(lax.modes()[0].cdot, 2);
  EXPECT_EQ(lax.degree_bound(), 2);
}

TEST(DegenerateLax, ReproducesFundamentalLax) {
  // gl(2) (1,0), I = {1}: the oscillator expansion has exactly the terms 1, x, d, x d
  Representation rep(HighestWeight({1, 0}));
  const auto coeffs = DegenerateLax(IndexSet(2, {1}), rep).coefficients(cplx(0.7, 0.1));
  for (const auto& [key, C] : coeffs) {
    EXPECT_LE(key.first[0], 1);
    EXPECT_LE(key.second[0], 1);
  }
  EXPECT_EQ(coeffs.size(), 4u);
}

TEST(LaxFundamental, GlnInvariant) {
  Representation rep(HighestWeight({2, 1, 0}));
  const int n = 3;
  const Index d = rep.dim();
  const CMatrix L = lax_fundamental(cplx(0.4, 0.2), rep).matrix();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      CMatrix e = CMatrix::Zero(n, n);
      e(a - 1, b - 1) = 1.0;
      const CMatrix G = kron(e, CMatrix::Identity(d, d)) + kron(CMatrix::Identity(n, n), rep.J(a, b));
      EXPECT_LT(max_abs(commutator(L, G)), 1e-13);
    }
}

TEST(Monomials, CountsCompositions) {
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(monomials_of_degree(0, 0).size(), 1u);
  EXPECT_EQ(monomials_of_degree(0, 1).size(), 0u);
}
