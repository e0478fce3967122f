#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace weylfan;

namespace {

Monomial random_monomial(std::mt19937& rng, std::size_t nvars, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  Monomial m(nvars);
  for (std::size_t v = 0; v < nvars; ++v) m[v] = e(rng);
  return m;
}

}  // namespace

TEST(Order, BaseOrders) {
  const MonomialOrder lex(2, BaseOrder::lex);
  const MonomialOrder grlex(2, BaseOrder::grlex);
  const MonomialOrder grevlex(3, BaseOrder::grevlex);
  EXPECT_TRUE(lex.less(Monomial{0, 5}, Monomial{1, 0}));
  EXPECT_TRUE(grlex.less(Monomial{1, 0}, Monomial{0, 2}));
  EXPECT_TRUE(grlex.less(Monomial{0, 2}, Monomial{1, 1}));
  // grevlex: x1*x3 < x2^2
  EXPECT_TRUE(grevlex.less(Monomial{1, 0, 1}, Monomial{0, 2, 0}));
  EXPECT_EQ(lex.compare(Monomial{1, 1}, Monomial{1, 1}), 0);
  const MonomialOrder swapped(2, BaseOrder::lex, {1, 0});
  EXPECT_TRUE(swapped.less(Monomial{5, 0}, Monomial{0, 1}));
  EXPECT_EQ(parse_base_order("grlex"), BaseOrder::grlex);
  EXPECT_THROW(parse_base_order("deglex"), Error);
}

TEST(Order, WeightRefinement) {
  const MonomialOrder base(2, BaseOrder::grevlex);
  const MonomialOrder w = base.refined_by(testing_support::rats({-1, 2}));
  EXPECT_TRUE(w.less(Monomial{1, 0}, Monomial{0, 1}));
  EXPECT_TRUE(w.less(Monomial{3, 0}, Monomial{0, 0}));
  EXPECT_FALSE(w.is_term_order());
  EXPECT_TRUE(base.refined_by(testing_support::rats({0, 2})).is_term_order());
  EXPECT_THROW(base.refined_by(testing_support::rats({1})), Error);
}

TEST(Order, LiftedOrderComparesDehomogenizedPartFirst) {
  const MonomialOrder base(2, BaseOrder::grevlex);
  const MonomialOrder lifted = base.lifted();
  EXPECT_TRUE(lifted.is_lifted());
  EXPECT_EQ(lifted.nvars(), 3u);
  EXPECT_TRUE(lifted.less(Monomial{5, 1, 0}, Monomial{0, 0, 2}));
  EXPECT_TRUE(lifted.less(Monomial{2, 1, 0}, Monomial{1, 1, 0}));
  EXPECT_FALSE(lifted.is_term_order());
}

TEST(Order, Multiplicative) {
  std::mt19937 rng(41);
  const std::size_t n = 4;
  std::vector<MonomialOrder> orders{MonomialOrder(n, BaseOrder::lex), MonomialOrder(n, BaseOrder::grlex, {3, 1, 0, 2}),
                                    MonomialOrder(n, BaseOrder::grevlex)};
  orders.push_back(orders[2].refined_by(testing_support::rats({2, -1, 0, 3})));
  orders.push_back(MonomialOrder(3, BaseOrder::grevlex).lifted());
  for (const auto& o : orders) {
    for (int trial = 0; trial < 200; ++trial) {
      const Monomial a = random_monomial(rng, o.nvars(), 3);
      const Monomial b = random_monomial(rng, o.nvars(), 3);
      const Monomial c = random_monomial(rng, o.nvars(), 3);
      EXPECT_EQ(o.compare(a, b), o.compare(a * c, b * c));
      EXPECT_EQ(o.compare(a, b), -o.compare(b, a));
    }
  }
}

TEST(Order, TermOrdersAreAdmissibleOnWeyl) {
  const auto a2 = weyl_presentation(2);
  for (BaseOrder b : {BaseOrder::lex, BaseOrder::grlex, BaseOrder::grevlex}) {
    for (std::vector<std::size_t> pri : {std::vector<std::size_t>{0, 1, 2, 3}, {3, 2, 1, 0}, {2, 0, 3, 1}}) {
      EXPECT_TRUE(validate_order(a2, MonomialOrder(4, b, pri)));
    }
  }
}

TEST(Order, Sl2Admissibility) {
  const auto s = sl2_presentation();
  // lex with y2 > y1 > y3: y2 is larger than y1*y3, which it must correct.
  EXPECT_FALSE(validate_order(s, MonomialOrder(3, BaseOrder::lex, {1, 0, 2})));
  EXPECT_TRUE(validate_order(s, MonomialOrder(3, BaseOrder::grlex)));
  EXPECT_TRUE(validate_order(s, MonomialOrder(3, BaseOrder::lex, {0, 2, 1})));
}

TEST(Order, WeightOrdersInsideRegionAreAdmissible) {
  std::mt19937 rng(42);
  const auto a2 = weyl_presentation(2);
  int checked = 0;
  while (checked < 30) {
    const auto w = WeightVector::from_flat(a2, oracle::random_vector(rng, 4, -3, 3));
    if (!pr_contains(a2, w)) continue;
    ++checked;
    EXPECT_TRUE(validate_order(a2, weight_order(a2, w)));
  }
}
