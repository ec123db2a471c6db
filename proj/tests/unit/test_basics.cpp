#include <gtest/gtest.h>

#include "spinchain/errors.hpp"
#include "spinchain/index_set.hpp"
#include "spinchain/linop.hpp"
#include "spinchain/parallel.hpp"
#include "spinchain/parse.hpp"
#include "spinchain/polynomial.hpp"

using namespace spinchain;

TEST(IndexSet, SortsAndComplements) {
  IndexSet I(4, {3, 1});
  EXPECT_EQ(I.members(), (std::vector<int>{1, 3}));
  EXPECT_EQ(I.complement().members(), (std::vector<int>{2, 4}));
  EXPECT_EQ(I.str(), "{1,3}");
  EXPECT_TRUE(I.with(2).contains(2));
  EXPECT_EQ(IndexSet::parse("", 3), IndexSet::none(3));
  EXPECT_EQ(IndexSet::parse("1,2,3", 3), IndexSet::full(3));
}

TEST(IndexSet, RejectsBadMembers) {
  EXPECT_THROW(IndexSet(3, {0}), InputError);
  EXPECT_THROW(IndexSet(3, {4}), InputError);
  EXPECT_THROW(IndexSet(3, {2, 2}), InputError);
  EXPECT_THROW(IndexSet::parse("1,x", 3), InputError);
}

TEST(IndexSet, AllSubsetsCountAndOrder) {
  const auto s = all_subsets(4);
  ASSERT_EQ(s.size(), 16u);
  EXPECT_TRUE(s.front().empty());
  EXPECT_EQ(s.back(), IndexSet::full(4));
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LE(s[i - 1].size(), s[i].size());
}

TEST(Parse, IntList) {
  EXPECT_EQ(parse_int_list("2,1,0"), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(parse_int_list("-1, 3"), (std::vector<int>{-1, 3}));
  EXPECT_THROW(parse_int_list("2,,1"), InputError);
  EXPECT_THROW(parse_int_list("a"), InputError);
}

TEST(Parse, ComplexLiterals) {
  EXPECT_EQ(parse_complex("0.7"), cplx(0.7, 0));
  EXPECT_EQ(parse_complex("1.3i"), cplx(0, 1.3));
  EXPECT_EQ(parse_complex("0.3+0.2i"), cplx(0.3, 0.2));
  EXPECT_EQ(parse_complex("-i"), cplx(0, -1));
  EXPECT_EQ(parse_complex("2-1e-3i"), cplx(2, -1e-3));
  EXPECT_EQ(parse_complex("+1"), cplx(1, 0));
  EXPECT_THROW(parse_complex("1+"), InputError);
  EXPECT_THROW(parse_complex("abc"), InputError);
  EXPECT_EQ(parse_complex_list("0.3,1.1+0.2i").size(), 2u);
}

TEST(LinOp, ValidatesShape) {
  EXPECT_THROW(LinOp(CMatrix::Zero(2, 3), BasisTag::single("x", 2)), Error);
  EXPECT_THROW(LinOp(CMatrix::Zero(2, 2), BasisTag::single("x", 3)), Error);
  LinOp op(CMatrix::Identity(4, 4), BasisTag::single("x", 2).tensor(BasisTag::single("y", 2)));
  EXPECT_EQ(op.basis().factors, (std::vector<Index>{2, 2}));
}

TEST(LinOp, PermutationAndShift) {
  const Index d = 3;
  const CMatrix P = permutation(d);
  CMatrix a = CMatrix::Random(d, d), b = CMatrix::Random(d, d);
  EXPECT_LT(max_abs(P * kron(a, b) * P - kron(b, a)), 1e-14);
  // S (v1 v2 v3) = v2 v3 v1
  const CMatrix S = cyclic_shift(2, 3);
  CMatrix x = CMatrix::Random(2, 2), y = CMatrix::Random(2, 2), w = CMatrix::Random(2, 2);
  EXPECT_LT(max_abs(S * kron(kron(x, y), w) * S.transpose() - kron(kron(y, w), x)), 1e-14);
  EXPECT_LT(max_abs(embed_site(x, 1, 3, 2) - kron(kron(CMatrix::Identity(2, 2), x), CMatrix::Identity(2, 2))), 0.0 + 1e-15);
}

TEST(Polynomial, RecoversCoefficientsAndRoots) {
  auto f = [](cplx z) { return (z - 0.5) * (z + cplx(0.3, 1.0)) * (z - 2.0); };
  const auto p = fit_on_circle(f, 8, cplx(0.1, 0.05), 2.7);
  EXPECT_EQ(p.degree(), 3);
  auto r = p.roots();
  ASSERT_EQ(r.size(), 3u);
  for (cplx expected : {cplx(0.5), cplx(-0.3, -1.0), cplx(2.0)}) {
    double best = 1e9;
    for (cplx x : r) best = std::min(best, std::abs(x - expected));
    EXPECT_LT(best, 1e-10);
  }
  EXPECT_LT(std::abs(p(cplx(0.7, -0.4)) - f(cplx(0.7, -0.4))), 1e-12);
}

TEST(Polynomial, ConstantHasNoRoots) {
  const auto p = fit_on_circle([](cplx) { return cplx(2.0, 1.0); }, 5, 0.0, 1.0);
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE(p.roots().empty());
}

TEST(Parallel, RunsEveryIndexAndPropagatesErrors) {
  std::vector<int> hits(50, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                 if (i == 7) throw InputError("boom");
               }),
               InputError);
}
