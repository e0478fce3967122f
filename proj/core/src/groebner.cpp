#include "weylfan/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "weylfan/polyhedral.hpp"

namespace weylfan {

namespace {

using OrderedPoly = std::map<Monomial, Rational, OrderLess>;

constexpr std::size_t kMaxReductionSteps = 20'000'000;

OrderedPoly to_ordered(const SkewPoly& f, const MonomialOrder& order) {
  OrderedPoly r(OrderLess{&order});
  for (const auto& [m, c] : f.terms()) r.emplace(m, c);
  return r;
}

void subtract_scaled(OrderedPoly& target, const SkewPoly& source, const Rational& scale) {
  for (const auto& [m, c] : source.terms()) {
    auto [it, inserted] = target.try_emplace(m, -c * scale);
    if (!inserted) {
      it->second -= c * scale;
      if (it->second == 0) target.erase(it);
    }
  }
}

struct Element {
  SkewPoly poly;
  Monomial lead;
  Rational lead_coef;
};

Element make_element(SkewPoly f, const MonomialOrder& order) {
  const Monomial lead = leading_monomial(f, order);
  const Rational lc = f.coefficient(lead);
  f *= Rational(1) / lc;
  return {std::move(f), lead, Rational(1)};
}

// Full left reduction of f against the elements whose index is in `use`.
SkewPoly reduce(const RingPresentation& p, const SkewPoly& f, const std::vector<Element>& basis,
                const std::vector<bool>* use, const MonomialOrder& order, std::size_t& steps) {
  OrderedPoly work = to_ordered(f, order);
  SkewPoly rem(p.nvars());
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial t = top->first;
    const Rational c = top->second;
    const Element* divisor = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (use != nullptr && !(*use)[i]) continue;
      if (basis[i].lead.divides(t)) {
        divisor = &basis[i];
        break;
      }
    }
    if (++steps > kMaxReductionSteps) throw Error(ErrorCode::budget, "reduction step budget exceeded");
    if (divisor == nullptr) {
      rem.add_term(t, c);
      work.erase(top);
      continue;
    }
    const SkewPoly q = multiply(p, SkewPoly::monomial(t / divisor->lead), divisor->poly);
    subtract_scaled(work, q, c / q.coefficient(t));
  }
  return rem;
}

Rational selection_degree(const Monomial& m, const std::optional<std::vector<Rational>>& grading) {
  if (grading) return dot(*grading, m);
  return Rational(m.total_degree());
}

struct Pair {
  Rational degree;
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

bool relations_homogeneous(const RingPresentation& p, const std::vector<Rational>& grading) {
  const std::size_t nv = p.nvars();
  auto check = [&](const Monomial& product, const SkewPoly& rel) {
    const Rational d = dot(grading, product);
    for (const auto& [m, c] : rel.terms()) {
      if (dot(grading, m) != d) return false;
    }
    return true;
  };
  for (int i = 0; i < p.n(); ++i) {
    for (int j = 0; j < p.m(); ++j) {
      Monomial prod(nv);
      prod[p.x_var(j)] = 1;
      prod[p.y_var(i)] = 1;
      if (!check(prod, p.q1(i, j))) return false;
    }
    for (int j = 0; j < p.n(); ++j) {
      Monomial prod(nv);
      prod[p.y_var(i)] += 1;
      prod[p.y_var(j)] += 1;
      if (!check(prod, p.q2(i, j))) return false;
    }
  }
  return true;
}

std::vector<Monomial> relation_product_monomials(const RingPresentation& p, std::vector<const SkewPoly*>& rels) {
  std::vector<Monomial> prods;
  const std::size_t nv = p.nvars();
  for (int i = 0; i < p.n(); ++i) {
    for (int j = 0; j < p.m(); ++j) {
      Monomial prod(nv);
      prod[p.x_var(j)] = 1;
      prod[p.y_var(i)] = 1;
      prods.push_back(prod);
      rels.push_back(&p.q1(i, j));
    }
    for (int j = 0; j < p.n(); ++j) {
      if (i == j) continue;
      Monomial prod(nv);
      prod[p.y_var(i)] += 1;
      prod[p.y_var(j)] += 1;
      prods.push_back(prod);
      rels.push_back(&p.q2(i, j));
    }
  }
  return prods;
}

}  // namespace

GbOptions GbOptions::from_environment() {
  GbOptions o;
  if (const char* s = std::getenv("WEYLFAN_MAX_PAIRS")) o.max_pairs = static_cast<std::size_t>(std::stoull(s));
  if (const char* s = std::getenv("WEYLFAN_MAX_DEGREE")) o.max_degree = parse_rational(s);
  return o;
}

bool validate_order(const RingPresentation& p, const MonomialOrder& order) {
  if (order.nvars() != p.nvars()) return false;
  std::vector<const SkewPoly*> rels;
  const auto prods = relation_product_monomials(p, rels);
  for (std::size_t k = 0; k < prods.size(); ++k) {
    for (const auto& [m, c] : rels[k]->terms()) {
      if (!order.less(m, prods[k])) return false;
    }
  }
  return true;
}

Monomial leading_monomial(const SkewPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorCode::invalid_argument, "leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (best == nullptr || order.less(*best, m)) best = &m;
  }
  return *best;
}

SkewPoly normal_form(const RingPresentation& p, const SkewPoly& f, std::span<const SkewPoly> basis,
                     const MonomialOrder& order, const GbOptions& options) {
  (void)options;
  std::vector<Element> elems;
  for (const auto& g : basis) {
    if (!g.is_zero()) elems.push_back(make_element(g, order));
  }
  std::size_t steps = 0;
  return reduce(p, f, elems, nullptr, order, steps);
}

GroebnerBasis buchberger(const RingPresentation& p, std::span<const SkewPoly> gens, const MonomialOrder& order,
                         const GbOptions& options, const std::optional<std::vector<Rational>>& grading) {
  if (!validate_order(p, order)) {
    throw Error(ErrorCode::invalid_argument, "order " + order.describe() + " is not multiplicative for this ring");
  }
  if (!order.is_term_order()) {
    if (!grading || !relations_homogeneous(p, *grading)) {
      throw Error(ErrorCode::invalid_argument, "non-term orders need homogeneous input; use groebner_basis");
    }
    for (const auto& g : gens) {
      if (!is_homogeneous(*grading, g)) {
        throw Error(ErrorCode::invalid_argument, "non-term orders need homogeneous input; use groebner_basis");
      }
    }
  }
  const bool commutative = p.is_commutative();
  std::vector<Element> basis;
  std::size_t steps = 0;

  auto pair_less = [&order](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);

  auto add = [&](SkewPoly h) {
    Element e = make_element(std::move(h), order);
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (commutative && gcd(basis[i].lead, e.lead).is_one()) continue;
      const Monomial l = lcm(basis[i].lead, e.lead);
      pairs.insert(Pair{selection_degree(l, grading), l, i, k});
    }
    basis.push_back(std::move(e));
  };

  for (const auto& g : gens) {
    if (g.nvars() != p.nvars()) throw Error(ErrorCode::dimension_mismatch, "generator over the wrong ring");
    SkewPoly h = reduce(p, g, basis, nullptr, order, steps);
    if (!h.is_zero()) add(std::move(h));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    const Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > options.max_pairs) {
      throw Error(ErrorCode::budget, "S-pair budget of " + std::to_string(options.max_pairs) + " exceeded");
    }
    if (options.max_degree && pr.degree > *options.max_degree) {
      throw Error(ErrorCode::budget, "degree budget exceeded (S-pair of degree " + to_string(pr.degree) + ")");
    }
    const Element& a = basis[pr.i];
    const Element& b = basis[pr.j];
    SkewPoly s = multiply(p, SkewPoly::monomial(pr.lcm / a.lead), a.poly);
    s -= multiply(p, SkewPoly::monomial(pr.lcm / b.lead), b.poly);
    SkewPoly h = reduce(p, s, basis, nullptr, order, steps);
    if (!h.is_zero()) add(std::move(h));
  }

  // minimal basis, then tail reduction
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (basis[j].lead.divides(basis[i].lead) && (basis[j].lead != basis[i].lead || j < i)) keep[i] = false;
    }
  }
  GroebnerBasis out{order, {}, {}, true};
  std::vector<std::pair<Monomial, SkewPoly>> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    std::vector<bool> others = keep;
    others[i] = false;
    SkewPoly tail = basis[i].poly;
    tail.add_term(basis[i].lead, -tail.coefficient(basis[i].lead));
    SkewPoly r = reduce(p, tail, basis, &others, order, steps);
    r.add_term(basis[i].lead, 1);
    reduced.emplace_back(basis[i].lead, std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&order](const auto& x, const auto& y) { return order.less(x.first, y.first); });
  for (auto& [lead, poly] : reduced) {
    out.leads.push_back(lead);
    out.elements.push_back(std::move(poly));
  }
  return out;
}

std::optional<std::vector<Rational>> find_positive_grading(const RingPresentation& p,
                                                           std::span<const SkewPoly> gens) {
  const std::size_t nv = p.nvars();
  std::vector<Constraint> cs;
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<Rational> e(nv);
    e[i] = 1;
    cs.push_back({e, -1, Relation::ge});
  }
  auto equal_degree = [&](const Monomial& a, const Monomial& b) {
    std::vector<Rational> d(nv);
    for (std::size_t k = 0; k < nv; ++k) d[k] = a[k] - b[k];
    cs.push_back({d, 0, Relation::eq});
  };
  std::vector<const SkewPoly*> rels;
  const auto prods = relation_product_monomials(p, rels);
  for (std::size_t k = 0; k < prods.size(); ++k) {
    for (const auto& [m, c] : rels[k]->terms()) equal_degree(prods[k], m);
  }
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const Monomial& first = g.terms().begin()->first;
    for (const auto& [m, c] : g.terms()) equal_degree(first, m);
  }
  auto point = find_point(nv, cs);
  if (!point) return std::nullopt;
  return primitive(*point);
}

GroebnerBasis groebner_basis(const RingPresentation& p, std::span<const SkewPoly> gens, const MonomialOrder& order,
                             const GbOptions& options) {
  if (!validate_order(p, order)) {
    throw Error(ErrorCode::invalid_argument, "order " + order.describe() + " is not multiplicative for this ring");
  }
  if (order.is_term_order()) return buchberger(p, gens, order, options);
  if (auto grading = find_positive_grading(p, gens)) return buchberger(p, gens, order, options, grading);

  const ReesPresentation rees = rees_presentation(p, pr_sample_positive(p));
  std::vector<SkewPoly> lifted_gens;
  for (const auto& g : gens) {
    if (!g.is_zero()) lifted_gens.push_back(homogenize(rees, g));
  }
  const MonomialOrder lifted = order.lifted();
  GroebnerBasis tilde = buchberger(rees.ring, lifted_gens, lifted, options, rees.grading());
  if (options.saturate_x0) {
    while (true) {
      bool changed = false;
      std::vector<SkewPoly> stripped;
      for (const auto& g : tilde.elements) {
        Monomial::Exponent content = -1;
        for (const auto& [m, c] : g.terms()) content = content < 0 ? m[0] : std::min(content, m[0]);
        SkewPoly s(rees.ring.nvars());
        for (const auto& [m, c] : g.terms()) {
          Monomial mm = m;
          mm[0] -= content;
          s.add_term(mm, c);
        }
        changed = changed || content > 0;
        stripped.push_back(std::move(s));
      }
      if (!changed) break;
      tilde = buchberger(rees.ring, stripped, lifted, options, rees.grading());
    }
  }
  GroebnerBasis out{order, {}, {}, false};
  for (std::size_t i = 0; i < tilde.elements.size(); ++i) {
    SkewPoly g = dehomogenize(rees, tilde.elements[i]);
    const Monomial lead = drop_x0(tilde.leads[i]);
    g *= Rational(1) / g.coefficient(lead);
    if (std::find(out.elements.begin(), out.elements.end(), g) != out.elements.end()) continue;
    out.elements.push_back(std::move(g));
    out.leads.push_back(lead);
  }
  return out;
}

MonomialOrder weight_order(const RingPresentation& p, const WeightVector& w, const MonomialOrder& tiebreak) {
  if (w.size() != p.nvars()) throw Error(ErrorCode::dimension_mismatch, "weight vector length mismatch");
  return tiebreak.refined_by(w.flat());
}

MonomialOrder weight_order(const RingPresentation& p, const WeightVector& w) {
  return weight_order(p, w, MonomialOrder(p.nvars()));
}

MonomialIdeal initial_ideal_order(const RingPresentation& p, std::span<const SkewPoly> gens,
                                  const MonomialOrder& order, const GbOptions& options) {
  const GroebnerBasis gb = groebner_basis(p, gens, order, options);
  return MonomialIdeal(p.nvars(), gb.leads);
}

std::vector<CommPoly> initial_ideal_weight(const RingPresentation& p, std::span<const SkewPoly> gens,
                                           const WeightVector& w, const GbOptions& options) {
  if (!pr_contains(p, w)) throw Error(ErrorCode::region, "weight not in polynomial region");
  const GroebnerBasis gb = groebner_basis(p, gens, weight_order(p, w), options);
  std::vector<CommPoly> forms;
  for (const auto& g : gb.elements) forms.push_back(initial_form(p, g, w));
  return forms;
}

std::vector<CommPoly> canonical_ideal(std::span<const CommPoly> gens, const GbOptions& options) {
  std::vector<SkewPoly> skew;
  std::size_t nv = 0;
  for (const auto& g : gens) {
    nv = g.nvars();
    if (!g.is_zero()) skew.push_back(as_skew(g));
  }
  if (skew.empty()) return {};
  const RingPresentation s = commutative_presentation(static_cast<int>(nv), 0);
  const GroebnerBasis gb = buchberger(s, skew, MonomialOrder(nv), options);
  std::vector<CommPoly> out;
  for (const auto& g : gb.elements) out.push_back(as_comm(g));
  return out;
}

bool is_monomial_ideal(std::span<const CommPoly> canonical_gens) {
  return std::all_of(canonical_gens.begin(), canonical_gens.end(), [](const CommPoly& g) { return g.size() == 1; });
}

}  // namespace weylfan
