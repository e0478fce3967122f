#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylfan/groebner.hpp"
#include "weylfan/monomial_ideal.hpp"

namespace weylfan {

/// Square-free parts of the generators, minimalized.
MonomialIdeal radical_monomial(const MonomialIdeal& j);

/// Minimal primes of a monomial ideal as sorted variable subsets (minimal
/// transversals of the generator supports). Empty for the unit ideal; the
/// zero ideal gives the single empty subset.
std::vector<std::vector<std::size_t>> minimal_primes_monomial(const MonomialIdeal& j);

/// Krull dimension of S/J: total_vars minus the smallest transversal.
/// std::nullopt stands for -infinity (J the unit ideal).
std::optional<int> krull_dim_monomial(const MonomialIdeal& j, std::size_t total_vars);

/// Q(t) / prod_j (1 - t^{c_j}).
struct HilbertSeries {
  /// Coefficient of t^k at index k.
  std::vector<Integer> numerator;
  std::vector<int> denominator;

  bool is_zero() const;
  /// Power series coefficients of degree 0..up_to; cumulative sums
  /// when requested (extra factor 1/(1-t)).
  std::vector<Integer> coefficients(std::size_t up_to, bool cumulative = false) const;
  /// Order of the pole at t = 1; -1 for the zero series.
  int pole_order() const;
  /// Least common multiple of the denominator exponents.
  int period() const;
};

/// Hilbert series of S/J for a positive integer grading.
/// Throws Error(invalid_argument) on a non-positive weight.
HilbertSeries hilbert_series_monomial(const MonomialIdeal& j, const std::vector<int>& weights);

/// Degree of the eventual quasi-polynomial i -> dim (S/J)_i, or of the
/// cumulative count. std::nullopt for the zero module.
std::optional<int> quasi_poly_degree(const HilbertSeries& h, bool cumulative);

/// i -> polys[i mod period](i); coefficients from the constant term up.
struct QuasiPolynomial {
  int period = 1;
  std::vector<std::vector<Rational>> polys;
  int degree = 0;

  Rational operator()(const Integer& i) const;
};

/// Interpolates each residue class mod `period` through degree + 1 samples
/// taken at or after `start`. values[i] is the value at i.
QuasiPolynomial fit_quasi_polynomial(const std::vector<Integer>& values, std::size_t start, int period, int degree);

/// Quasi-polynomial of the (cumulative) Hilbert function, fitted past the
/// numerator degree where the function is exactly quasi-polynomial.
std::optional<QuasiPolynomial> hilbert_quasi_polynomial(const HilbertSeries& h, bool cumulative);

/// GKdim(R/I): Krull dimension of the leading monomials of a Groebner basis
/// for the refinement order of w. w must be positive and in PR(R).
/// std::nullopt when I = R.
std::optional<int> gk_dim(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w,
                          const GbOptions& options = {});

struct CharacteristicIdeal {
  /// Canonical generators of in_w(I).
  std::vector<CommPoly> initial;
  bool is_monomial = false;
  /// Present only when the initial ideal is monomial.
  std::optional<MonomialIdeal> radical;
};

CharacteristicIdeal char_ideal(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w,
                               const GbOptions& options = {});

enum class Verdict { pass, fail, vacuous_pass };
std::string to_string(Verdict v);

struct Component {
  std::vector<std::size_t> vars;
  int dim = 0;
  bool pass = false;
  /// dim <= GKdim(R/I).
  bool below_gkdim = true;
};

struct ComponentReport {
  WeightVector weight;
  CharacteristicIdeal ideal;
  int bound = 0;
  /// Components are listed only for monomial characteristic ideals.
  bool decomposition_supported = false;
  std::vector<Component> components;
  std::optional<int> total_dim;
  std::optional<int> gkdim;
  Verdict verdict = Verdict::fail;
  /// Every component (or the total, without decomposition) is at most GKdim.
  bool upper_bound_holds = true;
};

/// Checks that every component of the characteristic variety has dimension
/// at least `bound`, and reports the comparison with GKdim(R/I).
ComponentReport verify_component_bound(const RingPresentation& p, std::span<const SkewPoly> gens,
                                       const WeightVector& w, int bound, const GbOptions& options = {});

}  // namespace weylfan
