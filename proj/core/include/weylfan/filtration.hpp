#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylfan/polynomial.hpp"
#include "weylfan/ring.hpp"

namespace weylfan {

/// (u, v) in Q^m x Q^n: deg x_j = u_j, deg y_i = v_i.
struct WeightVector {
  std::vector<Rational> u;
  std::vector<Rational> v;

  WeightVector() = default;
  WeightVector(std::vector<Rational> u_, std::vector<Rational> v_) : u(std::move(u_)), v(std::move(v_)) {}

  /// Splits a flat vector (u first) according to the presentation.
  static WeightVector from_flat(const RingPresentation& p, const std::vector<Rational>& flat);

  std::vector<Rational> flat() const;
  std::size_t size() const noexcept { return u.size() + v.size(); }

  bool is_integral() const;
  bool is_nonnegative() const;
  bool is_positive() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

std::string to_string(const WeightVector& w);

/// w . exponent(m) with raw rational entries.
Rational dot(const std::vector<Rational>& weights, const Monomial& m);

/// Filtration degree max ceil(u).a + ceil(v).b; std::nullopt stands for
/// -infinity (the zero polynomial).
std::optional<Rational> degree(const RingPresentation& p, const SkewPoly& f, const WeightVector& w);

/// max w.(a,b) over the support, raw rational weights; nullopt for zero.
std::optional<Rational> weighted_degree(const std::vector<Rational>& weights, const SkewPoly& f);
std::optional<Rational> weighted_degree(const std::vector<Rational>& weights, const CommPoly& f);

/// Principal symbol: the top-weight part of f, as an element of S.
/// Throws Error(invalid_argument) for f = 0.
CommPoly initial_form(const RingPresentation& p, const SkewPoly& f, const WeightVector& w);

/// Same, in S itself (w arbitrary; the polynomial region of S is everything).
CommPoly initial_form(const CommPoly& f, const std::vector<Rational>& weights);

/// Linear form coeffs . w + constant.
struct LinearForm {
  std::vector<Rational> coeffs;
  Rational constant = 0;

  Rational evaluate(const std::vector<Rational>& w) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Conjunction of strict inequalities L(w) > 0.
struct HalfspaceSystem {
  std::vector<LinearForm> strict;

  bool contains(const std::vector<Rational>& w) const;
};

/// Weight coordinate names u1..um, v1..vn (u0 first in Rees rings).
std::vector<std::string> weight_names(const RingPresentation& p);

/// Renders each inequality as "lhs>rhs" with nonnegative coefficients on both
/// sides, e.g. "v1+v3>v2".
std::vector<std::string> format_inequalities(const HalfspaceSystem& h, const std::vector<std::string>& names);
std::string format_linear_inequality(const std::vector<Rational>& coeffs, const std::vector<std::string>& names,
                                     const std::string& relation);

/// The polynomial region PR(R) as an open polyhedral cone: one inequality
/// per monomial of each nonzero relation entry, deduplicated.
HalfspaceSystem pr_halfspaces(const RingPresentation& p);

bool pr_contains(const RingPresentation& p, const WeightVector& w);

/// (1, p 1) with p = 1 + the largest x-degree occurring in the relation
/// tables; always positive and inside PR(R).
WeightVector pr_sample_positive(const RingPresentation& p);

}  // namespace weylfan
