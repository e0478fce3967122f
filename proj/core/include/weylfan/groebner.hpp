#pragma once

#include <optional>
#include <span>
#include <vector>

#include "weylfan/filtration.hpp"
#include "weylfan/monomial_ideal.hpp"
#include "weylfan/order.hpp"
#include "weylfan/rees.hpp"

namespace weylfan {

struct GbOptions {
  /// Maximum number of S-pairs reduced before giving up.
  std::size_t max_pairs = 100'000;
  /// Optional cap on the (graded) degree of S-pair lcms.
  std::optional<Rational> max_degree;
  /// After completing in the Rees ring, divide basis elements by their x0
  /// content and complete again until stable.
  bool saturate_x0 = false;

  /// Applies WEYLFAN_MAX_PAIRS / WEYLFAN_MAX_DEGREE from the environment.
  static GbOptions from_environment();
};

/// Left Groebner basis with marked initial monomials.
struct GroebnerBasis {
  MonomialOrder order{0};
  std::vector<SkewPoly> elements;
  std::vector<Monomial> leads;
  bool reduced = false;
};

/// (M1)/(M2): every monomial of every relation entry is below the product it
/// corrects.
bool validate_order(const RingPresentation& p, const MonomialOrder& order);

Monomial leading_monomial(const SkewPoly& f, const MonomialOrder& order);

/// Remainder of f on division by G from the left: f - r lies in the left
/// ideal generated by G and no monomial of r is divisible by a leading
/// monomial of G. For orders that are not term orders the caller must supply
/// homogeneous data (termination is only guaranteed degree-by-degree);
/// a step budget guards the loop.
SkewPoly normal_form(const RingPresentation& p, const SkewPoly& f, std::span<const SkewPoly> basis,
                     const MonomialOrder& order, const GbOptions& options = {});

/// Buchberger completion of the left ideal generated by gens. The order must
/// pass validate_order and be a term order, unless every generator is
/// homogeneous for `grading` (a positive grading for which the relations are
/// homogeneous). Returns the reduced basis, sorted by leading monomial.
GroebnerBasis buchberger(const RingPresentation& p, std::span<const SkewPoly> gens, const MonomialOrder& order,
                         const GbOptions& options = {},
                         const std::optional<std::vector<Rational>>& grading = std::nullopt);

/// Positive integer grading for which the relations and all gens are
/// homogeneous, if one exists.
std::optional<std::vector<Rational>> find_positive_grading(const RingPresentation& p,
                                                           std::span<const SkewPoly> gens);

/// Groebner basis for any multiplicative order. Term orders and homogeneous
/// input are completed directly; otherwise the generators are homogenized
/// with respect to a positive vector of PR(R), completed in the Rees ring
/// under the lifted order and dehomogenized. The result is a Groebner basis
/// that is reduced only on the direct route.
GroebnerBasis groebner_basis(const RingPresentation& p, std::span<const SkewPoly> gens, const MonomialOrder& order,
                             const GbOptions& options = {});

/// The refinement order <_(u,v) with the given tiebreak.
MonomialOrder weight_order(const RingPresentation& p, const WeightVector& w,
                           const MonomialOrder& tiebreak);
MonomialOrder weight_order(const RingPresentation& p, const WeightVector& w);

MonomialIdeal initial_ideal_order(const RingPresentation& p, std::span<const SkewPoly> gens,
                                  const MonomialOrder& order, const GbOptions& options = {});

/// Generators of in_w(I) in S, as initial forms of a Groebner basis for the
/// refinement order. Throws Error(region) if w is outside PR(R).
std::vector<CommPoly> initial_ideal_weight(const RingPresentation& p, std::span<const SkewPoly> gens,
                                           const WeightVector& w, const GbOptions& options = {});

/// Reduced Groebner basis of an ideal of S under grevlex, made monic and
/// sorted: a canonical form, so two ideals are equal iff these agree.
std::vector<CommPoly> canonical_ideal(std::span<const CommPoly> gens, const GbOptions& options = {});

/// Leading monomials of canonical_ideal, i.e. in_grevlex(J).
bool is_monomial_ideal(std::span<const CommPoly> canonical_gens);

}  // namespace weylfan
