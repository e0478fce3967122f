#include "weylfan/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace weylfan {

namespace {

struct ConeLess {
  bool operator()(const OpenCone& a, const OpenCone& b) const {
    return std::tie(a.dim, a.equalities, a.strict) < std::tie(b.dim, b.equalities, b.strict);
  }
};

std::vector<Rational> exponent_difference(const Monomial& a, const Monomial& b) {
  std::vector<Rational> d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
  return d;
}

Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::vector<Rational> axpy(const std::vector<Rational>& x, const Rational& t, const std::vector<Rational>& d) {
  std::vector<Rational> r = x;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += t * d[k];
  return r;
}

OpenCone cone_from_basis(const RingPresentation& p, const GroebnerBasis& gb, const std::vector<Rational>& w) {
  OpenCone cone;
  cone.dim = p.nvars();
  for (const auto& g : gb.elements) {
    const Rational top = *weighted_degree(w, g);
    const Monomial* anchor = nullptr;
    for (const auto& [m, c] : g.terms()) {
      if (dot(w, m) == top) {
        anchor = &m;
        break;
      }
    }
    for (const auto& [m, c] : g.terms()) {
      if (&m == anchor) continue;
      if (dot(w, m) == top) {
        cone.equalities.push_back(exponent_difference(m, *anchor));
      } else {
        cone.strict.push_back(exponent_difference(*anchor, m));
      }
    }
  }
  for (const auto& form : pr_halfspaces(p).strict) cone.strict.push_back(form.coeffs);
  return cone.canonical();
}

std::vector<CommPoly> forms_at(const RingPresentation& p, const GroebnerBasis& gb, const WeightVector& w) {
  std::vector<CommPoly> forms;
  for (const auto& g : gb.elements) forms.push_back(initial_form(p, g, w));
  return forms;
}

std::vector<Constraint> positivity(std::size_t dim) {
  std::vector<Constraint> cs;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rational> e(dim);
    e[i] = 1;
    cs.push_back({e, 0, Relation::gt});
  }
  return cs;
}

}  // namespace

std::vector<Rational> segment_point(const std::vector<Rational>& w1, const std::vector<Rational>& w2,
                                    const Rational& r) {
  std::vector<Rational> out(w1.size());
  for (std::size_t k = 0; k < w1.size(); ++k) out[k] = (1 - r) * w1[k] + r * w2[k];
  return out;
}

std::vector<CommPoly> canonical_initial_ideal(const RingPresentation& p, std::span<const SkewPoly> gens,
                                              const WeightVector& w, const GbOptions& options) {
  return canonical_ideal(initial_ideal_weight(p, gens, w, options), options);
}

GroebnerCone cone_of(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w,
                     const GbOptions& options) {
  if (w.size() != p.nvars()) throw Error(ErrorCode::dimension_mismatch, "weight vector length mismatch");
  if (!pr_contains(p, w)) throw Error(ErrorCode::region, "weight not in polynomial region");
  const std::vector<Rational> flat = w.flat();
  GroebnerCone out;
  out.witness = flat;
  out.marker = groebner_basis(p, gens, weight_order(p, w), options);
  out.initial = canonical_ideal(forms_at(p, out.marker, w), options);
  out.cone = cone_from_basis(p, out.marker, flat);
  if (w.is_positive()) return out;

  // Outside the positive orthant the marker may come from the Rees route and
  // need not be reduced. A positive point of the described cone lies in the
  // same class; its reduced basis gives the exact cone.
  std::vector<Constraint> cs = out.cone.constraints();
  for (auto& c : positivity(p.nvars())) cs.push_back(std::move(c));
  const auto positive = find_point(p.nvars(), cs);
  if (!positive) {
    out.in_gr = false;
    return out;
  }
  const WeightVector wp = WeightVector::from_flat(p, *positive);
  out.marker = groebner_basis(p, gens, weight_order(p, wp), options);
  out.cone = cone_from_basis(p, out.marker, *positive);
  return out;
}

bool same_class(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w1,
                const WeightVector& w2, const GbOptions& options) {
  return canonical_initial_ideal(p, gens, w1, options) == canonical_initial_ideal(p, gens, w2, options);
}

EpsilonResult epsilon_threshold(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& wp,
                                const WeightVector& w, const GbOptions& options) {
  if (wp.size() != p.nvars() || w.size() != p.nvars()) {
    throw Error(ErrorCode::dimension_mismatch, "weight vector length mismatch");
  }
  if (!pr_contains(p, wp)) throw Error(ErrorCode::region, "weight not in polynomial region");
  const std::vector<Rational> a = wp.flat();
  const std::vector<Rational> b = w.flat();
  const MonomialOrder order = MonomialOrder(p.nvars()).refined_by(b).refined_by(a);
  const GroebnerBasis gb = groebner_basis(p, gens, order, options);

  std::optional<Rational> eps;
  auto bound = [&eps](const Rational& ratio) {
    if (!eps || ratio < *eps) eps = ratio;
  };
  for (std::size_t k = 0; k < gb.elements.size(); ++k) {
    const Monomial& lead = gb.leads[k];
    for (const auto& [m, c] : gb.elements[k].terms()) {
      if (m == lead) continue;
      const std::vector<Rational> d = exponent_difference(lead, m);
      const Rational da = inner(a, d);
      const Rational db = inner(b, d);
      if (da > 0 && db < 0) bound(da / -db);
    }
  }
  for (const auto& form : pr_halfspaces(p).strict) {
    const Rational la = form.evaluate(a);
    const Rational lb = form.evaluate(b) - form.constant;
    if (lb < 0) bound(la / -lb);
  }

  EpsilonResult out;
  out.epsilon = eps.value_or(Rational(1));

  const RingPresentation s = symbol_ring(p);
  std::vector<SkewPoly> outer;
  for (const auto& f : forms_at(p, gb, wp)) outer.push_back(as_skew(f));
  out.lhs = canonical_ideal(initial_ideal_weight(s, outer, w, options), options);

  const Rational half = out.epsilon / 2;
  const WeightVector moved = WeightVector::from_flat(p, axpy(a, half, b));
  out.rhs = canonical_initial_ideal(p, gens, moved, options);
  out.verified = out.lhs == out.rhs;
  return out;
}

bool gr_region_contains(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w,
                        const GbOptions& options) {
  if (w.is_positive()) return pr_contains(p, w);
  return cone_of(p, gens, w, options).in_gr;
}

WalkResult walk(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w1,
                const WeightVector& w2, const GbOptions& options, std::size_t max_steps) {
  if (!w1.is_positive() || !w2.is_positive()) {
    throw Error(ErrorCode::invalid_argument, "walk endpoints must be positive");
  }
  if (!pr_contains(p, w1) || !pr_contains(p, w2)) {
    throw Error(ErrorCode::region, "weight not in polynomial region");
  }
  const std::vector<Rational> f1 = w1.flat();
  const std::vector<Rational> f2 = w2.flat();
  std::vector<Rational> dir(f1.size());
  for (std::size_t k = 0; k < dir.size(); ++k) dir[k] = f2[k] - f1[k];
  auto at = [&](const Rational& r) { return WeightVector::from_flat(p, segment_point(f1, f2, r)); };

  WalkResult out;
  out.verified = true;
  Rational r = 0;
  out.breakpoints.push_back(r);
  out.at_breakpoints.push_back(canonical_initial_ideal(p, gens, w1, options));
  std::size_t steps = 0;
  while (r < 1) {
    if (++steps > max_steps) throw Error(ErrorCode::budget, "walk step budget exceeded");
    // in_{w2}(J_r): the point w(r) + t w2 is proportional to w((r + t) / (1 + t)).
    const EpsilonResult ahead = epsilon_threshold(p, gens, at(r), w2, options);
    out.verified = out.verified && ahead.verified;
    const std::vector<CommPoly>& open = ahead.rhs;
    const Rational t = std::min(Rational(ahead.epsilon / 2), Rational(1));
    const Rational mid = (r + t) / (1 + t);

    const GroebnerCone cone = cone_of(p, gens, at(mid), options);
    Rational next = 1;
    for (const auto& row : cone.cone.equalities) {
      if (inner(row, dir) != 0) throw Error(ErrorCode::verification, "walk segment leaves a lower dimensional cone");
    }
    for (const auto& row : cone.cone.strict) {
      const Rational va = inner(row, f1);
      const Rational vb = inner(row, dir);
      if (vb < 0) next = std::min(next, Rational(va / -vb));
    }
    if (next <= r) throw Error(ErrorCode::verification, "walk failed to advance");

    const WeightVector wn = at(next);
    std::vector<CommPoly> here = canonical_initial_ideal(p, gens, wn, options);
    const EpsilonResult behind = epsilon_threshold(p, gens, wn, w1, options);
    out.verified = out.verified && behind.verified && behind.lhs == open;

    out.segments.push_back({r, next, open});
    r = next;
    out.breakpoints.push_back(r);
    out.at_breakpoints.push_back(std::move(here));
  }
  if (!out.verified) throw Error(ErrorCode::verification, "perturbation identity failed along the walk");
  return out;
}

GroebnerFan enumerate_fan(const RingPresentation& p, std::span<const SkewPoly> gens, const GbOptions& options,
                          std::size_t max_cones) {
  const std::size_t dim = p.nvars();
  const std::vector<Rational> base = pr_sample_positive(p).flat();
  const HalfspaceSystem pr = pr_halfspaces(p);

  GroebnerFan fan;
  fan.dim = dim;

  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> jitter(-40, 40);
  std::optional<GroebnerCone> seed;
  for (int attempt = 0; attempt < 64 && !seed; ++attempt) {
    std::vector<Rational> w = base;
    if (attempt > 0) {
      for (std::size_t k = 0; k < dim; ++k) w[k] += base[k] * Rational(jitter(rng), 97);
    }
    const WeightVector wv = WeightVector::from_flat(p, w);
    if (!wv.is_positive() || !pr_contains(p, wv)) continue;
    GroebnerCone c = cone_of(p, gens, wv, options);
    if (c.full_dimensional()) seed = std::move(c);
  }
  if (!seed) throw Error(ErrorCode::verification, "no full dimensional seed cone found");

  std::vector<GroebnerCone> cones;
  std::map<OpenCone, std::size_t, ConeLess> index;
  std::set<std::pair<std::size_t, std::size_t>> adjacency;
  index.emplace(seed->cone, 0);
  cones.push_back(std::move(*seed));

  for (std::size_t at = 0; at < cones.size(); ++at) {
    const OpenCone current = cones[at].cone;
    for (std::size_t f = 0; f < current.strict.size(); ++f) {
      std::vector<Constraint> cs;
      for (const auto& e : current.equalities) cs.push_back({e, 0, Relation::eq});
      for (std::size_t k = 0; k < current.strict.size(); ++k) {
        cs.push_back({current.strict[k], 0, k == f ? Relation::eq : Relation::gt});
      }
      for (const auto& form : pr.strict) cs.push_back({form.coeffs, form.constant, Relation::gt});
      const auto facet_point = find_point(dim, cs);
      if (!facet_point) continue;  // facet on the boundary of PR(R)

      std::vector<Rational> out_normal = current.strict[f];
      for (auto& x : out_normal) x = -x;
      const EpsilonResult e = epsilon_threshold(p, gens, WeightVector::from_flat(p, *facet_point),
                                                WeightVector::from_flat(p, out_normal), options);
      if (!e.verified) throw Error(ErrorCode::verification, "perturbation identity failed at a facet");
      const std::vector<Rational> beyond = axpy(*facet_point, e.epsilon / 2, out_normal);
      GroebnerCone next = cone_of(p, gens, WeightVector::from_flat(p, beyond), options);

      std::size_t target;
      if (auto it = index.find(next.cone); it != index.end()) {
        target = it->second;
      } else {
        if (cones.size() >= max_cones) {
          fan.partial = true;
          continue;
        }
        target = cones.size();
        index.emplace(next.cone, target);
        cones.push_back(std::move(next));
      }
      if (target != at) adjacency.insert(std::minmax(at, target));
    }
  }

  std::vector<std::size_t> order(cones.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&cones](std::size_t x, std::size_t y) { return ConeLess{}(cones[x].cone, cones[y].cone); });
  std::vector<std::size_t> rank(cones.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  for (std::size_t k : order) fan.cones.push_back(std::move(cones[k]));
  for (const auto& [x, y] : adjacency) fan.adjacency.emplace_back(std::minmax(rank[x], rank[y]));
  std::sort(fan.adjacency.begin(), fan.adjacency.end());
  return fan;
}

std::vector<SkewPoly> universal_gb(const RingPresentation& p, std::span<const SkewPoly> gens,
                                   const GbOptions& options, std::size_t max_cones) {
  const ReesPresentation rees = rees_presentation(p, pr_sample_positive(p));
  std::vector<SkewPoly> lifted;
  for (const auto& g : gens) {
    if (!g.is_zero()) lifted.push_back(homogenize(rees, g));
  }
  const GroebnerFan fan = enumerate_fan(rees.ring, lifted, options, max_cones);
  if (fan.partial) throw Error(ErrorCode::budget, "fan enumeration budget exceeded");

  // Scale independently of the cone so duplicates compare equal.
  const MonomialOrder grevlex(p.nvars());
  std::vector<SkewPoly> out;
  for (const auto& cone : fan.cones) {
    for (std::size_t k = 0; k < cone.marker.elements.size(); ++k) {
      SkewPoly g = dehomogenize(rees, cone.marker.elements[k]);
      if (g.is_zero()) continue;
      g *= Rational(1) / g.coefficient(leading_monomial(g, grevlex));
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), [](const SkewPoly& x, const SkewPoly& y) { return x.terms() < y.terms(); });
  return out;
}

std::size_t locate(const GroebnerFan& fan, const std::vector<Rational>& w, const std::vector<CommPoly>& initial,
                   std::size_t* matches) {
  std::size_t first = fan.cones.size();
  std::size_t count = 0;
  for (std::size_t k = 0; k < fan.cones.size(); ++k) {
    const GroebnerCone& c = fan.cones[k];
    if (c.initial != initial) continue;
    bool closed = true;
    for (const auto& e : c.cone.equalities) closed = closed && inner(e, w) == 0;
    for (const auto& s : c.cone.strict) closed = closed && inner(s, w) >= 0;
    if (!closed) continue;
    if (count++ == 0) first = k;
  }
  if (matches != nullptr) *matches = count;
  return first;
}

}  // namespace weylfan
