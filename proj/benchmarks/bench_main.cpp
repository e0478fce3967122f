#include <benchmark/benchmark.h>

#include <random>

#include "weylfan/charvar.hpp"
#include "weylfan/fan.hpp"
#include "weylfan/io.hpp"

using namespace weylfan;

namespace {

SkewPoly random_poly(std::mt19937& rng, std::size_t nvars, int degree, int terms) {
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<int> coef(1, 9);
  SkewPoly f(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (int k = 0; k < degree; ++k) m[var(rng)] += 1;
    f.add_term(m, Rational(coef(rng)));
  }
  return f;
}

void BM_MultiplyWeyl(benchmark::State& state) {
  const auto a2 = weyl_presentation(2);
  std::mt19937 rng(1);
  const int degree = static_cast<int>(state.range(0));
  const SkewPoly f = random_poly(rng, 4, degree, 4);
  const SkewPoly g = random_poly(rng, 4, degree, 4);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a2, f, g));
}
BENCHMARK(BM_MultiplyWeyl)->Arg(2)->Arg(4)->Arg(6);

void BM_MultiplySl2(benchmark::State& state) {
  const auto s = sl2_presentation();
  std::mt19937 rng(2);
  const SkewPoly f = random_poly(rng, 3, 4, 4);
  const SkewPoly g = random_poly(rng, 3, 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(s, f, g));
}
BENCHMARK(BM_MultiplySl2);

void BM_BuchbergerExampleB(benchmark::State& state) {
  const auto a2 = weyl_presentation(2);
  const std::vector<SkewPoly> gens{parse_polynomial(a2, "y1^2 - y2"), parse_polynomial(a2, "x1*y1 + 2*x2*y2")};
  const auto order = weight_order(a2, parse_weight(a2, "1,1,1,3"));
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(a2, gens, order));
}
BENCHMARK(BM_BuchbergerExampleB);

void BM_ReesRouteNegativeWeight(benchmark::State& state) {
  const auto a2 = weyl_presentation(2);
  const std::vector<SkewPoly> gens{parse_polynomial(a2, "y1^2 - y2"), parse_polynomial(a2, "x1*y1 + 2*x2*y2")};
  const auto w = parse_weight(a2, "2,4,-1,-1");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_initial_ideal(a2, gens, w));
}
BENCHMARK(BM_ReesRouteNegativeWeight);

void BM_FanParabola(benchmark::State& state) {
  const auto a1 = weyl_presentation(1);
  const std::vector<SkewPoly> gens{parse_polynomial(a1, "y1^3 + x1*y1 + 1")};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fan(a1, gens));
}
BENCHMARK(BM_FanParabola);

void BM_HilbertSeries(benchmark::State& state) {
  const MonomialIdeal j(4, {Monomial{3, 1, 0, 2}, Monomial{0, 2, 2, 1}, Monomial{1, 0, 3, 0}, Monomial{2, 2, 0, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series_monomial(j, {1, 2, 1, 3}));
}
BENCHMARK(BM_HilbertSeries);

}  // namespace

BENCHMARK_MAIN();
