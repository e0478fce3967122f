#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace weylfan;
using testing_support::poly;
using testing_support::weight;

TEST(Rees, PaddedWeylRelation) {
  const auto a1 = weyl_presentation(1);
  const auto r01 = rees_presentation(a1, weight(a1, "0,1"));
  EXPECT_EQ(r01.ring.m(), 2);
  EXPECT_EQ(r01.ring.first_x_label(), 0);
  EXPECT_EQ(r01.ring.var_names(), (std::vector<std::string>{"x0", "x1", "y1"}));
  EXPECT_EQ(weight_names(r01.ring), (std::vector<std::string>{"u0", "u1", "v1"}));
  EXPECT_EQ(r01.ring.q1(0, 1), poly(r01.ring, "x0"));
  EXPECT_TRUE(r01.ring.q1(0, 0).is_zero());
  const auto r11 = rees_presentation(a1, weight(a1, "1,1"));
  EXPECT_EQ(r11.ring.q1(0, 1), poly(r11.ring, "x0^2"));
  EXPECT_EQ(r11.grading(), testing_support::rats({1, 1, 1}));
}

TEST(Rees, CommutativeRingStaysCommutative) {
  const auto c = commutative_presentation(1, 1);
  const auto r = rees_presentation(c, weight(c, "-2,5"));
  EXPECT_TRUE(r.ring.is_commutative());
}

TEST(Rees, RejectsBadWeights) {
  const auto a1 = weyl_presentation(1);
  EXPECT_THROW(rees_presentation(a1, weight(a1, "-1,1")), Error);
  try {
    rees_presentation(a1, weight(a1, "1/2,1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
  }
}

TEST(Rees, HomogenizeExamples) {
  const auto a1 = weyl_presentation(1);
  const SkewPoly f = poly(a1, "y1^2 - x1");
  const auto r11 = rees_presentation(a1, weight(a1, "1,1"));
  EXPECT_EQ(homogenize(r11, f), poly(r11.ring, "y1^2 - x0*x1"));
  const auto r = rees_presentation(a1, weight(a1, "2,-1"));
  EXPECT_EQ(homogenize(r, f), poly(r.ring, "x0^4*y1^2 - x1"));
  EXPECT_TRUE(homogenize(r, SkewPoly(2)).is_zero());
  EXPECT_EQ(lift_monomial(Monomial{1, 2}, 3), (Monomial{3, 1, 2}));
  EXPECT_EQ(drop_x0(Monomial{3, 1, 2}), (Monomial{1, 2}));
}

TEST(Rees, HomogenizeInTheSecondWeylAlgebra) {
  const auto a2 = weyl_presentation(2);
  const auto r = rees_presentation(a2, weight(a2, "1,1,1,3"));
  EXPECT_EQ(homogenize(r, poly(a2, "y1^2 - y2")), poly(r.ring, "x0*y1^2 - y2"));
  EXPECT_EQ(homogenize(r, poly(a2, "x1")), poly(r.ring, "x1"));
  EXPECT_EQ(dehomogenize(r, poly(r.ring, "x0*y1^2 - y2")), poly(a2, "y1^2 - y2"));
  EXPECT_EQ(dehomogenize(r, poly(r.ring, "x0^3")), poly(a2, "1"));
  const auto neg = rees_presentation(a2, weight(a2, "2,2,-1,-1"));
  EXPECT_EQ(homogenize(neg, poly(a2, "y1 - 1")), poly(neg.ring, "x0*y1 - 1"));
  // Every padding exponent is nonnegative and the relations are homogeneous.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_TRUE(neg.ring.q1(i, j).is_zero() || is_homogeneous(neg.grading(), neg.ring.q1(i, j)));
  }
}

TEST(Rees, RoundTripAndHomogeneity) {
  std::mt19937 rng(31);
  for (const auto& p : {weyl_presentation(2), sl2_presentation()}) {
    const auto w = pr_sample_positive(p);
    const auto rees = rees_presentation(p, w);
    EXPECT_TRUE(validate_presentation(rees.ring));
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = oracle::random_poly<SkewPoly>(rng, p.nvars(), 4, 4);
      const SkewPoly h = homogenize(rees, f);
      EXPECT_EQ(dehomogenize(rees, h), f);
      if (!f.is_zero()) EXPECT_TRUE(is_homogeneous(rees.grading(), h));
    }
  }
}

TEST(Rees, HomogenizationAtMixedSignWeights) {
  std::mt19937 rng(32);
  const auto a2 = weyl_presentation(2);
  for (const char* text : {"2,-1,0,3", "-1,2,2,-1", "3,3,-2,-2"}) {
    const auto rees = rees_presentation(a2, weight(a2, text));
    EXPECT_TRUE(validate_presentation(rees.ring));
    for (int trial = 0; trial < 15; ++trial) {
      const auto f = oracle::random_poly<SkewPoly>(rng, 4, 3, 4);
      const SkewPoly h = homogenize(rees, f);
      EXPECT_EQ(dehomogenize(rees, h), f);
      if (!f.is_zero()) EXPECT_TRUE(is_homogeneous(rees.grading(), h));
    }
  }
}

TEST(Rees, HomogenizingVariableIsCentral) {
  std::mt19937 rng(33);
  for (const auto& p : {weyl_presentation(2), sl2_presentation()}) {
    const auto rees = rees_presentation(p, pr_sample_positive(p));
    const SkewPoly x0 = SkewPoly::variable(rees.ring.nvars(), 0);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = oracle::random_poly<SkewPoly>(rng, rees.ring.nvars(), 3, 3);
      EXPECT_EQ(multiply(rees.ring, x0, f), multiply(rees.ring, f, x0));
    }
  }
}

TEST(Rees, ProductsOfHomogeneousElementsAreHomogeneous) {
  std::mt19937 rng(34);
  const auto s = sl2_presentation();
  const auto rees = rees_presentation(s, pr_sample_positive(s));
  for (int trial = 0; trial < 20; ++trial) {
    const SkewPoly f = homogenize(rees, oracle::random_poly<SkewPoly>(rng, 3, 3, 3));
    const SkewPoly g = homogenize(rees, oracle::random_poly<SkewPoly>(rng, 3, 3, 3));
    const SkewPoly fg = multiply(rees.ring, f, g);
    if (!fg.is_zero()) EXPECT_TRUE(is_homogeneous(rees.grading(), fg));
  }
}
