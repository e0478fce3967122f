#pragma once

#include "weylfan/filtration.hpp"

namespace weylfan {

/// Homogenization of R with respect to an integer weight in PR(R): a new
/// central generator x0 of weight 1 is prepended to the x-block, and every
/// relation is padded with the power of x0 that makes it homogeneous for
/// (1, u, v).
struct ReesPresentation {
  RingPresentation base;
  WeightVector weight;
  RingPresentation ring;

  /// The positive-on-x0 grading (1, u, v) over the Rees variables.
  std::vector<Rational> grading() const;
};

/// Throws Error(region) if w is outside PR(P), Error(invalid_argument) if w is
/// not integral.
ReesPresentation rees_presentation(const RingPresentation& p, const WeightVector& w);

/// Rees ring monomial x0^e * m.
Monomial lift_monomial(const Monomial& m, Monomial::Exponent x0_power);
/// Drops the x0 exponent.
Monomial drop_x0(const Monomial& m);

/// f~ = sum k x0^{i - w.(a,b)} x^a y^b with i = deg_w f. Zero maps to zero.
SkewPoly homogenize(const ReesPresentation& rees, const SkewPoly& f);

/// Substitutes x0 = 1.
SkewPoly dehomogenize(const ReesPresentation& rees, const SkewPoly& f);

/// True iff all terms of f share one weighted degree.
bool is_homogeneous(const std::vector<Rational>& grading, const SkewPoly& f);

}  // namespace weylfan
