#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "weylfan/fan.hpp"

using namespace weylfan;
using testing_support::ideal_of;
using testing_support::poly;
using testing_support::polys;
using testing_support::weight;

namespace {

MonomialOrder random_tiebreak(std::mt19937& rng, std::size_t nvars) {
  std::vector<std::size_t> pri(nvars);
  for (std::size_t i = 0; i < nvars; ++i) pri[i] = i;
  std::shuffle(pri.begin(), pri.end(), rng);
  std::uniform_int_distribution<int> kind(0, 2);
  return MonomialOrder(nvars, static_cast<BaseOrder>(kind(rng)), pri);
}

MonomialIdeal leads_of(const GroebnerBasis& gb) { return MonomialIdeal(gb.order.nvars(), gb.leads); }

/// in_order(J) for an ideal J of S, computed in S.
MonomialIdeal commutative_initial(std::size_t nvars, const std::vector<CommPoly>& gens, const MonomialOrder& order) {
  const auto s = commutative_presentation(static_cast<int>(nvars), 0);
  std::vector<SkewPoly> g;
  for (const auto& f : gens) g.push_back(as_skew(f));
  return leads_of(buchberger(s, g, order));
}

bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    if (gb.elements[i].coefficient(gb.leads[i]) != 1) return false;
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : gb.elements[i].terms()) {
        if (gb.leads[j].divides(m)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Groebner, NormalFormExamples) {
  const auto a1 = weyl_presentation(1);
  const MonomialOrder o(2, BaseOrder::grlex);
  const std::vector<SkewPoly> basis{poly(a1, "y1")};
  // y1*x1 = x1*y1 + 1
  EXPECT_EQ(normal_form(a1, poly(a1, "x1*y1 + 1"), basis, o), poly(a1, "1"));
  EXPECT_TRUE(normal_form(a1, poly(a1, "x1*y1"), basis, o).is_zero());
  const SkewPoly g = poly(a1, "y1^2 - x1");
  EXPECT_TRUE(normal_form(a1, g, std::vector<SkewPoly>{g}, o).is_zero());
}

TEST(Groebner, CommutativeLexExample) {
  const auto c = commutative_presentation(2, 0);
  const auto gb = buchberger(c, polys(c, {"x1^2 - x2", "x1"}), MonomialOrder(2, BaseOrder::lex));
  EXPECT_EQ(gb.elements, polys(c, {"x2", "x1"}));
  EXPECT_TRUE(gb.reduced);
}

TEST(Groebner, NonInvolutiveExample) {
  const auto a2 = weyl_presentation(2);
  const auto gens = polys(a2, {"y1^2 - y2", "x1*y1 + 2*x2*y2"});
  const auto order = weight_order(a2, weight(a2, "1,1,1,3"));
  const auto gb = groebner_basis(a2, gens, order);
  const auto expected = polys(a2, {"y2 - y1^2", "x2*y1^2 + 1/2*x1*y1"});
  EXPECT_EQ(std::set<SkewPoly::Terms>({gb.elements[0].terms(), gb.elements[1].terms()}),
            std::set<SkewPoly::Terms>({expected[0].terms(), expected[1].terms()}));
  EXPECT_EQ(gb.elements.size(), 2u);
  EXPECT_EQ(initial_ideal_order(a2, gens, order),
            MonomialIdeal(4, {Monomial{0, 0, 0, 1}, Monomial{0, 1, 2, 0}}));
}

TEST(Groebner, PrincipalIdealIsItsOwnBasis) {
  const auto a1 = weyl_presentation(1);
  const auto gb = buchberger(a1, polys(a1, {"y1 - 1"}), MonomialOrder(2, BaseOrder::grlex));
  EXPECT_EQ(gb.elements, polys(a1, {"y1 - 1"}));
}

TEST(Groebner, SimpleInitialIdeals) {
  const auto a1 = weyl_presentation(1);
  EXPECT_EQ(initial_ideal_order(a1, polys(a1, {"y1 - 1"}), MonomialOrder(2)), MonomialIdeal(2, {Monomial{0, 1}}));
  EXPECT_EQ(initial_ideal_order(a1, polys(a1, {"y1^2 - x1"}), MonomialOrder(2, BaseOrder::grlex)),
            MonomialIdeal(2, {Monomial{0, 2}}));
  const auto c = commutative_presentation(1, 0);
  EXPECT_EQ(initial_ideal_order(c, polys(c, {"x1"}), MonomialOrder(1)), MonomialIdeal(1, {Monomial{1}}));
}

TEST(Groebner, WeightInitialIdeals) {
  const auto a2 = weyl_presentation(2);
  const auto ex_a = polys(a2, {"y1 - 1", "y2 - 1"});
  EXPECT_EQ(canonical_initial_ideal(a2, ex_a, weight(a2, "2,2,-1,-1")), ideal_of(a2, {"1"}));
  EXPECT_EQ(canonical_initial_ideal(a2, ex_a, weight(a2, "1,1,1,1")), ideal_of(a2, {"y1", "y2"}));
  const auto a1 = weyl_presentation(1);
  EXPECT_EQ(canonical_initial_ideal(a1, polys(a1, {"y1^2 - x1"}), weight(a1, "2,1")), ideal_of(a1, {"y1^2 - x1"}));
  EXPECT_THROW(initial_ideal_weight(a1, polys(a1, {"y1"}), weight(a1, "-1,1")), Error);
}

TEST(Groebner, CanonicalIdealDecidesEquality) {
  const auto c = commutative_presentation(2, 0);
  EXPECT_EQ(ideal_of(c, {"x1^2", "x1*x2 - x2^2", "x2^3"}), ideal_of(c, {"x1*x2 - x2^2", "x1^2"}));
  EXPECT_NE(ideal_of(c, {"x1"}), ideal_of(c, {"x2"}));
  EXPECT_TRUE(is_monomial_ideal(ideal_of(c, {"x1^2", "x1*x2"})));
  EXPECT_FALSE(is_monomial_ideal(ideal_of(c, {"x1 - x2"})));
}

TEST(Groebner, PositiveGrading) {
  const auto a1 = weyl_presentation(1);
  EXPECT_FALSE(find_positive_grading(a1, polys(a1, {"y1^2 - x1"})).has_value());
  EXPECT_FALSE(find_positive_grading(sl2_presentation(), polys(sl2_presentation(), {"y1"})).has_value());
  const auto c = commutative_presentation(2, 0);
  const auto g = find_positive_grading(c, polys(c, {"x1^2 - x2"}));
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(*g, testing_support::rats({1, 2}));
  EXPECT_FALSE(find_positive_grading(c, polys(c, {"x1 - 1"})).has_value());
}

TEST(Groebner, Budgets) {
  const auto a2 = weyl_presentation(2);
  const auto gens = polys(a2, {"y1^2 - y2", "x1*y1 + 2*x2*y2"});
  GbOptions tight;
  tight.max_pairs = 0;
  try {
    buchberger(a2, gens, MonomialOrder(4), tight);
    FAIL() << "expected a budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::budget);
  }
  GbOptions low;
  low.max_degree = Rational(1);
  EXPECT_THROW(buchberger(a2, gens, MonomialOrder(4), low), Error);
}

TEST(Groebner, RejectsInadmissibleOrder) {
  const auto s = sl2_presentation();
  EXPECT_THROW(buchberger(s, polys(s, {"y1"}), MonomialOrder(3, BaseOrder::lex, {1, 0, 2})), Error);
}

TEST(Groebner, ReducedBasesAreSoundAndUnique) {
  std::mt19937 rng(51);
  for (const auto& problem : testing_support::corpus()) {
    const auto& p = problem.ring;
    const MonomialOrder order = random_tiebreak(rng, p.nvars());
    const auto gb = buchberger(p, problem.ideal, order);
    EXPECT_TRUE(is_reduced(gb)) << problem.name;
    for (const auto& g : problem.ideal) {
      EXPECT_TRUE(normal_form(p, g, gb.elements, order).is_zero()) << problem.name;
    }
    // Random left combinations reduce to zero.
    std::vector<SkewPoly> augmented = problem.ideal;
    for (int k = 0; k < 3 && !problem.ideal.empty(); ++k) {
      SkewPoly h(p.nvars());
      for (const auto& g : problem.ideal) h += multiply(p, oracle::random_poly<SkewPoly>(rng, p.nvars(), 2, 2), g);
      EXPECT_TRUE(normal_form(p, h, gb.elements, order).is_zero()) << problem.name;
      augmented.push_back(h);
    }
    std::shuffle(augmented.begin(), augmented.end(), rng);
    EXPECT_EQ(buchberger(p, augmented, order).elements, gb.elements) << problem.name;
    EXPECT_EQ(buchberger(p, gb.elements, order).elements, gb.elements) << problem.name;
  }
}

TEST(Groebner, RefinementOrderCombinesWeightAndTiebreak) {
  // in_<(in_w(I)) = in_{<_w}(I)
  std::mt19937 rng(52);
  for (const auto& problem : testing_support::corpus()) {
    const auto& p = problem.ring;
    for (const auto& w : problem.weights) {
      const MonomialOrder tiebreak = random_tiebreak(rng, p.nvars());
      const auto lhs = commutative_initial(p.nvars(), canonical_initial_ideal(p, problem.ideal, w), tiebreak);
      const auto rhs = initial_ideal_order(p, problem.ideal, weight_order(p, w, tiebreak));
      EXPECT_EQ(lhs, rhs) << problem.name << " at " << to_string(w);
    }
  }
}

TEST(Groebner, InitialFormsOfPositiveWeightBasisFormReducedBasis) {
  std::mt19937 rng(53);
  for (const auto& problem : testing_support::corpus()) {
    const auto& p = problem.ring;
    for (const auto& w : problem.weights) {
      if (!w.is_positive()) continue;
      const MonomialOrder tiebreak = random_tiebreak(rng, p.nvars());
      const auto gb = groebner_basis(p, problem.ideal, weight_order(p, w, tiebreak));
      std::vector<CommPoly> forms;
      for (const auto& g : gb.elements) forms.push_back(initial_form(p, g, w));
      // The forms generate in_w(I) ...
      EXPECT_EQ(canonical_ideal(forms), canonical_initial_ideal(p, problem.ideal, w)) << problem.name;
      // ... and are a Groebner basis of it under the tiebreak ...
      std::vector<Monomial> form_leads;
      for (const auto& f : forms) form_leads.push_back(leading_monomial(as_skew(f), tiebreak));
      EXPECT_EQ(MonomialIdeal(p.nvars(), form_leads), commutative_initial(p.nvars(), forms, tiebreak))
          << problem.name;
      // ... whose leads are those of the original basis, and which is reduced.
      EXPECT_EQ(form_leads, gb.leads) << problem.name;
      GroebnerBasis fgb{tiebreak, {}, form_leads, true};
      for (const auto& f : forms) fgb.elements.push_back(as_skew(f));
      EXPECT_TRUE(is_reduced(fgb)) << problem.name;
    }
  }
}

TEST(Groebner, InitialIdealsIgnoreGeneratorsAndTiebreak) {
  std::mt19937 rng(54);
  for (const auto& problem : testing_support::corpus()) {
    const auto& p = problem.ring;
    if (problem.ideal.empty()) continue;
    std::vector<SkewPoly> other = problem.ideal;
    other.push_back(multiply(p, oracle::random_poly<SkewPoly>(rng, p.nvars(), 2, 2), problem.ideal.front()) +
                    problem.ideal.back());
    std::reverse(other.begin(), other.end());
    for (const auto& w : problem.weights) {
      const auto a = canonical_initial_ideal(p, problem.ideal, w);
      EXPECT_EQ(a, canonical_initial_ideal(p, other, w)) << problem.name;
      EXPECT_EQ(canonical_ideal(initial_ideal_weight(p, problem.ideal, w)), a);
      const auto t1 = groebner_basis(p, problem.ideal, weight_order(p, w, MonomialOrder(p.nvars(), BaseOrder::lex)));
      std::vector<CommPoly> forms;
      for (const auto& g : t1.elements) forms.push_back(initial_form(p, g, w));
      EXPECT_EQ(canonical_ideal(forms), a) << problem.name;
    }
  }
}

TEST(Groebner, SaturationDoesNotChangeTheAnswer) {
  for (const auto& problem : testing_support::corpus()) {
    const auto& p = problem.ring;
    for (const auto& w : problem.weights) {
      if (w.is_nonnegative()) continue;
      GbOptions sat;
      sat.saturate_x0 = true;
      const auto order = weight_order(p, w);
      EXPECT_EQ(initial_ideal_order(p, problem.ideal, order), initial_ideal_order(p, problem.ideal, order, sat))
          << problem.name;
      EXPECT_EQ(canonical_initial_ideal(p, problem.ideal, w), canonical_initial_ideal(p, problem.ideal, w, sat))
          << problem.name;
    }
  }
}

TEST(Groebner, HomogenizedRouteMatchesTruncatedLinearAlgebra) {
  struct Case {
    RingPresentation ring;
    std::vector<std::string> gens;
    std::string weight;
    int depth;
  };
  const auto a1 = weyl_presentation(1);
  const auto a2 = weyl_presentation(2);
  const std::vector<Case> cases{
      {a1, {"y1^2 - x1"}, "2,-1", 3},
      {a1, {"y1^2 - x1"}, "-1,2", 3},
      {a1, {"x1*y1 - 2"}, "3,-1", 3},
      {a1, {"y1^3 + x1*y1 + 1"}, "-1,2", 3},
      {a2, {"y1 - 1", "y2 - 1"}, "2,2,-1,-1", 1},
      {a2, {"y1^2 - y2", "x1*y1 + 2*x2*y2"}, "2,4,-1,-1", 2},
      {a2, {"x1*y2 - x2*y1"}, "3,1,-2,1", 2},
  };
  for (const auto& c : cases) {
    const auto gens = polys(c.ring, c.gens);
    const auto w = weight(c.ring, c.weight);
    const auto forms = oracle::truncated_initial_forms(c.ring, gens, w.flat(), c.depth);
    EXPECT_EQ(canonical_ideal(forms), canonical_initial_ideal(c.ring, gens, w)) << c.gens.front() << " at " << c.weight;
  }
}

TEST(Groebner, FinitelyManyInitialIdeals) {
  const auto a2 = weyl_presentation(2);
  const auto gens = polys(a2, {"y1^2 - y2", "x1*y1 + 2*x2*y2"});
  std::mt19937 rng(55);
  std::set<std::vector<Monomial>> first;
  std::set<std::vector<Monomial>> all;
  for (int trial = 0; trial < 160; ++trial) {
    const auto w = WeightVector::from_flat(a2, oracle::random_vector(rng, 4, 1, 12));
    const auto leads = initial_ideal_order(a2, gens, weight_order(a2, w)).generators();
    if (trial < 80) first.insert(leads);
    all.insert(leads);
  }
  EXPECT_LE(all.size(), 12u);
  EXPECT_EQ(first, all);
}
