#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "weylfan/groebner.hpp"
#include "weylfan/polyhedral.hpp"

namespace weylfan {

/// The equivalence class of a weight vector: all (u,v) in PR(R) with the same
/// initial ideal, described by the marker Groebner basis.
struct GroebnerCone {
  /// Canonical constraints; includes the inequalities of PR(R).
  OpenCone cone;
  /// A point of the class (the input weight, or a positive point of the
  /// same class when one was found).
  std::vector<Rational> witness;
  GroebnerBasis marker;
  /// Canonical generators of in_w(I) (see canonical_ideal).
  std::vector<CommPoly> initial;
  /// False when no positive vector satisfies the cone constraints; the
  /// cone description is then only a subset of the class.
  bool in_gr = true;

  bool full_dimensional() const { return cone.equalities.empty(); }
};

struct GroebnerFan {
  std::size_t dim = 0;
  std::vector<GroebnerCone> cones;
  /// Index pairs (i < j) of cones sharing a facet.
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
  /// Set when the enumeration budget ran out.
  bool partial = false;
};

struct EpsilonResult {
  /// Every 0 < eps < epsilon satisfies in_w(in_w'(I)) = in_{w'+eps w}(I).
  Rational epsilon;
  /// Canonical in_w(in_w'(I)), computed from in_w'(I) inside S.
  std::vector<CommPoly> lhs;
  /// Canonical in_{w'+(epsilon/2)w}(I).
  std::vector<CommPoly> rhs;
  bool verified = false;
};

struct WalkSegment {
  Rational begin;
  Rational end;
  /// Canonical initial ideal on the open parameter interval.
  std::vector<CommPoly> ideal;
};

struct WalkResult {
  /// 0 = r_0 < ... < r_l = 1.
  std::vector<Rational> breakpoints;
  /// Canonical initial ideal at each breakpoint.
  std::vector<std::vector<CommPoly>> at_breakpoints;
  std::vector<WalkSegment> segments;
  /// in_{w2}(J_{r_j}) = J_(r_j, r_j+1) = in_{w1}(J_{r_j+1}) held at every step.
  bool verified = false;
};

/// Point (1 - r) w1 + r w2.
std::vector<Rational> segment_point(const std::vector<Rational>& w1, const std::vector<Rational>& w2,
                                    const Rational& r);

/// Canonical generators of in_w(I). Throws Error(region) outside PR(R).
std::vector<CommPoly> canonical_initial_ideal(const RingPresentation& p, std::span<const SkewPoly> gens,
                                              const WeightVector& w, const GbOptions& options = {});

/// Cone of the class of w: equalities among the terms of each initial form of
/// the marker basis, strict inequalities against the remaining terms, plus
/// PR(R). Throws Error(region) outside PR(R).
GroebnerCone cone_of(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w,
                     const GbOptions& options = {});

bool same_class(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w1,
                const WeightVector& w2, const GbOptions& options = {});

/// Threshold for the perturbation identity at w' in direction w (w is
/// arbitrary, w' must lie in PR(R)). Both sides are computed independently.
EpsilonResult epsilon_threshold(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& wp,
                                const WeightVector& w, const GbOptions& options = {});

/// True iff the class of w contains a strictly positive vector.
bool gr_region_contains(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w,
                        const GbOptions& options = {});

/// Groebner walk along the segment from w1 to w2 (both positive, in PR).
/// Throws Error(verification) if an identity check fails.
WalkResult walk(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w1,
                const WeightVector& w2, const GbOptions& options = {}, std::size_t max_steps = 1000);

/// Maximal cones of the fan inside PR(R), found by crossing facets from a
/// positive seed. Output cones are sorted by their canonical constraints.
GroebnerFan enumerate_fan(const RingPresentation& p, std::span<const SkewPoly> gens, const GbOptions& options = {},
                          std::size_t max_cones = 256);

/// Union of the marker bases of the fan of the homogenized ideal,
/// dehomogenized, made monic and deduplicated.
std::vector<SkewPoly> universal_gb(const RingPresentation& p, std::span<const SkewPoly> gens,
                                   const GbOptions& options = {}, std::size_t max_cones = 256);

/// Index of the first cone whose closure contains w and whose initial ideal
/// equals `initial`, counting all matches in `matches`.
std::size_t locate(const GroebnerFan& fan, const std::vector<Rational>& w, const std::vector<CommPoly>& initial,
                   std::size_t* matches = nullptr);

}  // namespace weylfan
