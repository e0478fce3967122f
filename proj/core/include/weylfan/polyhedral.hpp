#pragma once

#include <optional>
#include <vector>

#include "weylfan/rational.hpp"

namespace weylfan {

enum class Relation { eq, gt, ge };

/// coeffs . w + constant  (==, >, >=)  0
struct Constraint {
  std::vector<Rational> coeffs;
  Rational constant = 0;
  Relation rel = Relation::gt;
};

/// Exact feasibility by Gaussian elimination of the equalities followed by
/// Fourier-Motzkin elimination with strictness tracking. Returns a point
/// satisfying every constraint (small integers where possible), or nullopt.
/// Throws Error(budget) if elimination produces more than `max_rows` rows.
std::optional<std::vector<Rational>> find_point(std::size_t dim, const std::vector<Constraint>& constraints,
                                                std::size_t max_rows = 200'000);

inline bool is_feasible(std::size_t dim, const std::vector<Constraint>& constraints) {
  return find_point(dim, constraints).has_value();
}

bool satisfies(const std::vector<Rational>& w, const Constraint& c);

/// Relatively open polyhedral cone {w : E w = 0, S w > 0}.
struct OpenCone {
  std::size_t dim = 0;
  std::vector<std::vector<Rational>> equalities;
  std::vector<std::vector<Rational>> strict;

  bool contains(const std::vector<Rational>& w) const;
  std::vector<Constraint> constraints() const;
  std::optional<std::vector<Rational>> interior_point() const;

  /// Canonical form: equalities in reduced row echelon form, strict rows
  /// reduced modulo the equalities, redundant rows removed, everything scaled
  /// to primitive integer vectors and sorted. Two canonical cones are equal
  /// as sets iff they compare equal.
  OpenCone canonical() const;

  friend bool operator==(const OpenCone&, const OpenCone&) = default;
};

/// Indices of strict rows that are not implied by the others.
std::vector<std::size_t> irredundant_rows(const OpenCone& cone);

/// Scales a rational vector by a positive factor to a primitive integer vector.
std::vector<Rational> primitive(const std::vector<Rational>& v);

}  // namespace weylfan
