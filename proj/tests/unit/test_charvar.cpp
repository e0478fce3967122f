#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "weylfan/charvar.hpp"
#include "weylfan/fan.hpp"

using namespace weylfan;
using testing_support::ideal_of;
using testing_support::polys;
using testing_support::weight;

namespace {

MonomialIdeal random_monomial_ideal(std::mt19937& rng, std::size_t nvars, int gens, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Monomial> g;
  for (int k = 0; k < gens; ++k) {
    Monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v) m[v] = e(rng);
    if (!m.is_one()) g.push_back(m);
  }
  return MonomialIdeal(nvars, g);
}

std::vector<long> as_longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& z : v) out.push_back(z.get_si());
  return out;
}

MonomialIdeal leads_of(std::size_t nvars, const std::vector<CommPoly>& canonical) {
  const MonomialOrder grevlex(nvars);
  std::vector<Monomial> l;
  for (const auto& f : canonical) l.push_back(leading_monomial(as_skew(f), grevlex));
  return MonomialIdeal(nvars, l);
}

}  // namespace

TEST(Charvar, Radical) {
  const MonomialIdeal j(3, {Monomial{2, 0, 0}, Monomial{1, 3, 0}, Monomial{0, 1, 2}});
  EXPECT_EQ(radical_monomial(j), MonomialIdeal(3, {Monomial{1, 0, 0}, Monomial{0, 1, 1}}));
  EXPECT_TRUE(radical_monomial(MonomialIdeal(2)).is_zero());
  EXPECT_EQ(radical_monomial(MonomialIdeal(1, {Monomial{2}})), MonomialIdeal(1, {Monomial{1}}));
  const MonomialIdeal free(3, {Monomial{1, 1, 0}, Monomial{0, 0, 1}});
  EXPECT_EQ(radical_monomial(free), free);
}

TEST(Charvar, MinimalPrimesExamples) {
  const MonomialIdeal j(4, {Monomial{0, 0, 0, 1}, Monomial{0, 1, 2, 0}});
  EXPECT_EQ(minimal_primes_monomial(j), (std::vector<std::vector<std::size_t>>{{1, 3}, {2, 3}}));
  EXPECT_EQ(minimal_primes_monomial(MonomialIdeal(2)), (std::vector<std::vector<std::size_t>>{{}}));
  EXPECT_TRUE(minimal_primes_monomial(MonomialIdeal(2, {Monomial{0, 0}})).empty());
  EXPECT_EQ(minimal_primes_monomial(MonomialIdeal(2, {Monomial{1, 1}})), (std::vector<std::vector<std::size_t>>{{0}, {1}}));
}

TEST(Charvar, MinimalPrimesMatchBruteForce) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto j = random_monomial_ideal(rng, n, 1 + trial % 5, 2);
    const auto primes = minimal_primes_monomial(j);
    EXPECT_EQ(primes, oracle::minimal_primes(j));
    // The radical is the intersection of its minimal primes.
    if (!j.is_unit()) {
      MonomialIdeal meet(n, {Monomial(n)});
      for (const auto& s : primes) {
        std::vector<Monomial> g;
        for (std::size_t v : s) g.push_back(unit_monomial(n, v));
        meet = intersect(meet, MonomialIdeal(n, g));
      }
      EXPECT_EQ(meet, radical_monomial(j));
    }
  }
}

TEST(Charvar, KrullDimension) {
  EXPECT_EQ(krull_dim_monomial(MonomialIdeal(4), 4), 4);
  EXPECT_EQ(krull_dim_monomial(MonomialIdeal(4, {Monomial{0, 0, 0, 1}, Monomial{0, 1, 2, 0}}), 4), 2);
  EXPECT_FALSE(krull_dim_monomial(MonomialIdeal(2, {Monomial{0, 0}}), 2).has_value());
}

TEST(Charvar, HilbertSeriesExamples) {
  const auto zero = hilbert_series_monomial(MonomialIdeal(2), {1, 1});
  EXPECT_EQ(zero.coefficients(3, true).back(), 10);
  EXPECT_EQ(zero.pole_order(), 2);
  const auto line = hilbert_series_monomial(MonomialIdeal(2, {Monomial{0, 1}}), {1, 1});
  EXPECT_EQ(as_longs(line.coefficients(5)), (std::vector<long>{1, 1, 1, 1, 1, 1}));
  // (1 - t^3) / ((1 - t)(1 - t^2)): basis 1, x^a, y^b with deg x = 1, deg y = 2
  const auto xy = hilbert_series_monomial(MonomialIdeal(2, {Monomial{1, 1}}), {1, 2});
  EXPECT_EQ(as_longs(xy.coefficients(6)), (std::vector<long>{1, 1, 2, 1, 2, 1, 2}));
  EXPECT_EQ(xy.period(), 2);
  const auto unit = hilbert_series_monomial(MonomialIdeal(2, {Monomial{0, 0}}), {1, 1});
  EXPECT_TRUE(unit.is_zero());
  EXPECT_EQ(unit.pole_order(), -1);
  EXPECT_THROW(hilbert_series_monomial(MonomialIdeal(2), {1, 0}), Error);
}

TEST(Charvar, HilbertSeriesMatchesCounting) {
  std::mt19937 rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto j = random_monomial_ideal(rng, n, 1 + trial % 4, 3);
    std::vector<int> weights(n);
    std::uniform_int_distribution<int> wd(1, 3);
    for (auto& w : weights) w = wd(rng);
    const auto h = hilbert_series_monomial(j, weights);
    EXPECT_EQ(as_longs(h.coefficients(12)), oracle::hilbert_counts(j, weights, 12));
  }
}

TEST(Charvar, QuasiPolynomialDegree) {
  EXPECT_EQ(quasi_poly_degree(hilbert_series_monomial(MonomialIdeal(2), {1, 1}), false), 1);
  EXPECT_EQ(quasi_poly_degree(hilbert_series_monomial(MonomialIdeal(2), {1, 1}), true), 2);
  EXPECT_EQ(quasi_poly_degree(hilbert_series_monomial(MonomialIdeal(2, {Monomial{0, 1}}), {1, 1}), true), 1);
  const auto finite = hilbert_series_monomial(MonomialIdeal(1, {Monomial{3}}), {1});
  EXPECT_EQ(quasi_poly_degree(finite, true), 0);
  EXPECT_FALSE(quasi_poly_degree(hilbert_series_monomial(MonomialIdeal(1, {Monomial{0}}), {1}), true).has_value());
}

TEST(Charvar, QuasiPolynomialFitReproducesTheHilbertFunction) {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto j = random_monomial_ideal(rng, n, 1 + trial % 3, 3);
    std::vector<int> weights(n);
    std::uniform_int_distribution<int> wd(1, 3);
    for (auto& w : weights) w = wd(rng);
    const auto h = hilbert_series_monomial(j, weights);
    for (bool cumulative : {false, true}) {
      const auto q = hilbert_quasi_polynomial(h, cumulative);
      ASSERT_TRUE(q.has_value());
      const auto values = h.coefficients(80, cumulative);
      for (int i = 50; i <= 80; ++i) EXPECT_EQ((*q)(Integer(i)), values[static_cast<std::size_t>(i)]);
      EXPECT_EQ(q->degree, *quasi_poly_degree(h, cumulative));
    }
  }
}

TEST(Charvar, FitQuasiPolynomial) {
  // i even: i^2, i odd: i^2 + 1
  std::vector<Integer> values;
  for (int i = 0; i < 20; ++i) values.emplace_back(i * i + (i % 2));
  const auto q = fit_quasi_polynomial(values, 4, 2, 2);
  EXPECT_EQ(q(Integer(101)), 101 * 101 + 1);
  EXPECT_EQ(q(Integer(100)), 100 * 100);
}

TEST(Charvar, GkDimension) {
  const auto a1 = weyl_presentation(1);
  EXPECT_EQ(gk_dim(a1, polys(a1, {"y1"}), weight(a1, "1,1")), 1);
  EXPECT_EQ(gk_dim(a1, std::vector<SkewPoly>{}, weight(a1, "1,1")), 2);
  EXPECT_FALSE(gk_dim(a1, polys(a1, {"y1 - 1", "x1"}), weight(a1, "1,1")).has_value());
  const auto a2 = weyl_presentation(2);
  const auto ex_b = polys(a2, {"y1^2 - y2", "x1*y1 + 2*x2*y2"});
  EXPECT_EQ(gk_dim(a2, ex_b, weight(a2, "1,1,1,1")), 2);
  const auto s = sl2_presentation();
  // [y3,y1] = -y2 lies in the left ideal, so R/I is the trivial module.
  EXPECT_EQ(gk_dim(s, polys(s, {"y1", "y3"}), weight(s, "1,1,1")), 0);
  EXPECT_EQ(gk_dim(s, polys(s, {"y1"}), weight(s, "1,1,1")), 2);
  EXPECT_THROW(gk_dim(a1, polys(a1, {"y1"}), weight(a1, "2,-1")), Error);
}

TEST(Charvar, GkDimensionDoesNotDependOnTheWeight) {
  std::mt19937 rng(74);
  for (const auto& problem : testing_support::corpus()) {
    const auto& p = problem.ring;
    const auto ref = gk_dim(p, problem.ideal, pr_sample_positive(p));
    for (int k = 0; k < 3; ++k) {
      const auto w = WeightVector::from_flat(p, oracle::random_vector(rng, p.nvars(), 1, 9));
      EXPECT_EQ(gk_dim(p, problem.ideal, w), ref) << problem.name;
    }
  }
}

TEST(Charvar, InitialIdealsCannotGainDimension) {
  std::mt19937 rng(75);
  const auto c = commutative_presentation(3, 0);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<CommPoly> g;
    for (int k = 0; k < 2; ++k) g.push_back(oracle::random_poly<CommPoly>(rng, 3, 3, 3));
    const auto canon = canonical_ideal(g);
    const auto dim_j = krull_dim_monomial(leads_of(3, canon), 3);
    std::vector<SkewPoly> skew;
    for (const auto& f : g) skew.push_back(as_skew(f));
    const auto w = WeightVector::from_flat(c, oracle::random_vector(rng, 3, -3, 3));
    const auto in_w = canonical_initial_ideal(c, skew, w);
    const auto dim_in = krull_dim_monomial(leads_of(3, in_w), 3);
    if (!dim_j) {
      EXPECT_FALSE(dim_in.has_value());
      continue;
    }
    if (dim_in) EXPECT_LE(*dim_in, *dim_j);
    if (w.is_positive()) EXPECT_EQ(dim_in, dim_j);
  }
}

TEST(Charvar, CharacteristicIdeal) {
  const auto a2 = weyl_presentation(2);
  const auto ex_b = polys(a2, {"y1^2 - y2", "x1*y1 + 2*x2*y2"});
  const auto ch = char_ideal(a2, ex_b, weight(a2, "1,1,1,3"));
  EXPECT_TRUE(ch.is_monomial);
  ASSERT_TRUE(ch.radical.has_value());
  EXPECT_EQ(*ch.radical, MonomialIdeal(4, {Monomial{0, 0, 0, 1}, Monomial{0, 1, 1, 0}}));
  const auto a1 = weyl_presentation(1);
  const auto kx = char_ideal(a1, polys(a1, {"y1"}), weight(a1, "1,1"));
  EXPECT_EQ(kx.initial, ideal_of(a1, {"y1"}));
  ASSERT_TRUE(kx.radical.has_value());
  EXPECT_EQ(*kx.radical, MonomialIdeal(2, {Monomial{0, 1}}));
  const auto wall = char_ideal(a1, polys(a1, {"y1^2 - x1"}), weight(a1, "2,1"));
  EXPECT_FALSE(wall.is_monomial);
  EXPECT_FALSE(wall.radical.has_value());
}

TEST(Charvar, ComponentReports) {
  const auto a2 = weyl_presentation(2);
  const auto a = verify_component_bound(a2, polys(a2, {"y1 - 1", "y2 - 1"}), weight(a2, "2,2,-1,-1"), 2);
  EXPECT_EQ(a.verdict, Verdict::vacuous_pass);
  EXPECT_EQ(to_string(a.verdict), "vacuous-pass");
  EXPECT_TRUE(a.components.empty());
  EXPECT_EQ(a.gkdim, 2);

  const auto b =
      verify_component_bound(a2, polys(a2, {"y1^2 - y2", "x1*y1 + 2*x2*y2"}), weight(a2, "1,1,1,3"), 2);
  EXPECT_EQ(b.verdict, Verdict::pass);
  ASSERT_EQ(b.components.size(), 2u);
  EXPECT_EQ(b.components[0].vars, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(b.components[1].vars, (std::vector<std::size_t>{2, 3}));
  for (const auto& c : b.components) EXPECT_EQ(c.dim, 2);
  EXPECT_EQ(b.total_dim, 2);
  EXPECT_TRUE(b.upper_bound_holds);

  const auto whole = verify_component_bound(a2, std::vector<SkewPoly>{}, weight(a2, "1,1,1,1"), 2);
  EXPECT_EQ(whole.total_dim, 4);
  ASSERT_EQ(whole.components.size(), 1u);
  EXPECT_EQ(whole.components[0].dim, 4);
  EXPECT_EQ(whole.verdict, Verdict::pass);
  const auto c = commutative_presentation(2, 0);
  const auto strict = verify_component_bound(c, polys(c, {"x1"}), weight(c, "1,1"), 2);
  EXPECT_EQ(strict.verdict, Verdict::fail);
  ASSERT_EQ(strict.components.size(), 1u);
  EXPECT_FALSE(strict.components[0].pass);
}

TEST(Charvar, BoundHoldsAcrossTheWeylCorpus) {
  for (const auto& problem : testing_support::corpus()) {
    if (problem.ring_kind != "weyl") continue;
    for (const auto& w : problem.weights) {
      const auto r = verify_component_bound(problem.ring, problem.ideal, w, problem.ring.n());
      EXPECT_NE(r.verdict, Verdict::fail) << problem.name << " at " << to_string(w);
      EXPECT_TRUE(r.decomposition_supported) << problem.name;
    }
  }
}
