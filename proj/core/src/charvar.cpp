#include "weylfan/charvar.hpp"

#include <algorithm>
#include <numeric>

namespace weylfan {

namespace {

using Series = std::vector<Integer>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series subtract_shifted(Series a, const Series& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= b[k];
  trim(a);
  return a;
}

std::size_t weighted(const Monomial& m, const std::vector<int>& weights) {
  std::size_t d = 0;
  for (std::size_t k = 0; k < m.size(); ++k) d += static_cast<std::size_t>(weights[k]) * m[k];
  return d;
}

// N(J + <m>) = N(J) - t^deg(m) N(J : m), peeling generators off the back.
Series numerator(std::vector<Monomial> gens, std::size_t nvars, const std::vector<int>& weights) {
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  const Monomial m = gens.back();
  gens.pop_back();
  const MonomialIdeal rest(nvars, gens);
  const MonomialIdeal colon = rest.quotient(m);
  return subtract_shifted(numerator(gens, nvars, weights), numerator(colon.generators(), nvars, weights),
                          weighted(m, weights));
}

void covers(const std::vector<std::vector<std::size_t>>& edges, std::vector<std::size_t>& chosen,
            std::vector<std::vector<std::size_t>>& out) {
  for (const auto& e : edges) {
    const bool hit = std::any_of(e.begin(), e.end(), [&chosen](std::size_t v) {
      return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    });
    if (hit) continue;
    for (std::size_t v : e) {
      chosen.push_back(v);
      covers(edges, chosen, out);
      chosen.pop_back();
    }
    return;
  }
  std::vector<std::size_t> c = chosen;
  std::sort(c.begin(), c.end());
  out.push_back(std::move(c));
}

Monomial lead_grevlex(const CommPoly& f) { return leading_monomial(as_skew(f), MonomialOrder(f.nvars())); }

}  // namespace

MonomialIdeal radical_monomial(const MonomialIdeal& j) {
  std::vector<Monomial> gens;
  for (const auto& g : j.generators()) {
    Monomial s(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) s[k] = g[k] > 0 ? 1 : 0;
    gens.push_back(s);
  }
  return MonomialIdeal(j.nvars(), std::move(gens));
}

std::vector<std::vector<std::size_t>> minimal_primes_monomial(const MonomialIdeal& j) {
  if (j.is_unit()) return {};
  std::vector<std::vector<std::size_t>> edges;
  const MonomialIdeal radical = radical_monomial(j);
  for (const auto& g : radical.generators()) edges.push_back(g.support());
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> chosen;
  covers(edges, chosen, found);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& c : found) {
    const bool redundant = std::any_of(found.begin(), found.end(), [&c](const auto& d) {
      return d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end());
    });
    if (!redundant) minimal.push_back(c);
  }
  return minimal;
}

std::optional<int> krull_dim_monomial(const MonomialIdeal& j, std::size_t total_vars) {
  const auto primes = minimal_primes_monomial(j);
  if (primes.empty()) return std::nullopt;
  std::size_t smallest = total_vars;
  for (const auto& p : primes) smallest = std::min(smallest, p.size());
  return static_cast<int>(total_vars - smallest);
}

bool HilbertSeries::is_zero() const {
  return std::all_of(numerator.begin(), numerator.end(), [](const Integer& c) { return c == 0; });
}

std::vector<Integer> HilbertSeries::coefficients(std::size_t up_to, bool cumulative) const {
  std::vector<Integer> s(up_to + 1);
  for (std::size_t k = 0; k < numerator.size() && k <= up_to; ++k) s[k] = numerator[k];
  std::vector<int> factors = denominator;
  if (cumulative) factors.push_back(1);
  for (int c : factors) {
    const auto step = static_cast<std::size_t>(c);
    for (std::size_t k = step; k <= up_to; ++k) s[k] += s[k - step];
  }
  return s;
}

int HilbertSeries::pole_order() const {
  if (is_zero()) return -1;
  Series q = numerator;
  trim(q);
  int multiplicity = 0;
  while (true) {
    Integer at_one = 0;
    for (const auto& c : q) at_one += c;
    if (at_one != 0) break;
    // q(t) = (t - 1) r(t), synthetic division from the top.
    Series r(q.size() - 1);
    Integer carry = 0;
    for (std::size_t k = q.size() - 1; k >= 1; --k) {
      carry += q[k];
      r[k - 1] = carry;
    }
    q = std::move(r);
    ++multiplicity;
  }
  return static_cast<int>(denominator.size()) - multiplicity;
}

int HilbertSeries::period() const {
  int p = 1;
  for (int c : denominator) p = std::lcm(p, c);
  return p;
}

HilbertSeries hilbert_series_monomial(const MonomialIdeal& j, const std::vector<int>& weights) {
  if (weights.size() != j.nvars()) throw Error(ErrorCode::dimension_mismatch, "grading length mismatch");
  for (int w : weights) {
    if (w <= 0) throw Error(ErrorCode::invalid_argument, "Hilbert series needs positive weights");
  }
  HilbertSeries h;
  h.numerator = numerator(j.generators(), j.nvars(), weights);
  h.denominator = weights;
  return h;
}

std::optional<int> quasi_poly_degree(const HilbertSeries& h, bool cumulative) {
  if (h.is_zero()) return std::nullopt;
  return h.pole_order() - 1 + (cumulative ? 1 : 0);
}

Rational QuasiPolynomial::operator()(const Integer& i) const {
  Integer r = i % period;
  if (r < 0) r += period;
  const auto& c = polys.at(r.get_ui());
  Rational value = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * Rational(i) + *it;
  return value;
}

QuasiPolynomial fit_quasi_polynomial(const std::vector<Integer>& values, std::size_t start, int period, int degree) {
  if (period <= 0 || degree < 0) throw Error(ErrorCode::invalid_argument, "bad quasi-polynomial shape");
  const auto n = static_cast<std::size_t>(degree) + 1;
  QuasiPolynomial q;
  q.period = period;
  for (int residue = 0; residue < period; ++residue) {
    std::size_t first = start;
    while (first % static_cast<std::size_t>(period) != static_cast<std::size_t>(residue)) ++first;
    // Vandermonde system in the sample points, solved exactly.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t row = 0; row < n; ++row) {
      const std::size_t i = first + row * static_cast<std::size_t>(period);
      if (i >= values.size()) throw Error(ErrorCode::invalid_argument, "not enough samples to fit");
      Rational power = 1;
      for (std::size_t col = 0; col < n; ++col) {
        a[row][col] = power;
        power *= static_cast<long>(i);
      }
      a[row][n] = Rational(values[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (a[pivot][col] == 0) ++pivot;
      std::swap(a[pivot], a[col]);
      for (std::size_t row = 0; row < n; ++row) {
        if (row == col || a[row][col] == 0) continue;
        const Rational f = a[row][col] / a[col][col];
        for (std::size_t k = col; k <= n; ++k) a[row][k] -= f * a[col][k];
      }
    }
    std::vector<Rational> coeffs(n);
    for (std::size_t k = 0; k < n; ++k) coeffs[k] = a[k][n] / a[k][k];
    q.polys.push_back(std::move(coeffs));
  }
  q.degree = -1;
  for (const auto& c : q.polys) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) q.degree = std::max(q.degree, static_cast<int>(k));
    }
  }
  return q;
}

std::optional<QuasiPolynomial> hilbert_quasi_polynomial(const HilbertSeries& h, bool cumulative) {
  const auto degree = quasi_poly_degree(h, cumulative);
  if (!degree) return std::nullopt;
  const int d = std::max(*degree, 0);
  const int period = h.period();
  const std::size_t start = h.numerator.size();
  const std::size_t need = start + static_cast<std::size_t>(period) * static_cast<std::size_t>(d + 2);
  return fit_quasi_polynomial(h.coefficients(need, cumulative), start, period, d);
}

std::optional<int> gk_dim(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w,
                          const GbOptions& options) {
  if (w.size() != p.nvars()) throw Error(ErrorCode::dimension_mismatch, "weight vector length mismatch");
  if (!w.is_positive()) throw Error(ErrorCode::invalid_argument, "GK dimension needs a positive weight");
  if (!pr_contains(p, w)) throw Error(ErrorCode::region, "weight not in polynomial region");
  const GroebnerBasis gb = groebner_basis(p, gens, weight_order(p, w), options);
  return krull_dim_monomial(MonomialIdeal(p.nvars(), gb.leads), p.nvars());
}

CharacteristicIdeal char_ideal(const RingPresentation& p, std::span<const SkewPoly> gens, const WeightVector& w,
                               const GbOptions& options) {
  CharacteristicIdeal c;
  c.initial = canonical_ideal(initial_ideal_weight(p, gens, w, options), options);
  c.is_monomial = is_monomial_ideal(c.initial);
  if (c.is_monomial) {
    std::vector<Monomial> monos;
    for (const auto& g : c.initial) monos.push_back(g.terms().begin()->first);
    c.radical = radical_monomial(MonomialIdeal(p.nvars(), std::move(monos)));
  }
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::vacuous_pass:
      return "vacuous-pass";
  }
  return "fail";
}

ComponentReport verify_component_bound(const RingPresentation& p, std::span<const SkewPoly> gens,
                                       const WeightVector& w, int bound, const GbOptions& options) {
  ComponentReport r;
  r.weight = w;
  r.bound = bound;
  r.ideal = char_ideal(p, gens, w, options);
  r.gkdim = gk_dim(p, gens, pr_sample_positive(p), options);
  const std::size_t nv = p.nvars();

  if (r.ideal.is_monomial) {
    r.decomposition_supported = true;
    const auto primes = minimal_primes_monomial(*r.ideal.radical);
    if (primes.empty()) {
      r.verdict = Verdict::vacuous_pass;
      return r;
    }
    bool all = true;
    for (const auto& vars : primes) {
      Component c;
      c.vars = vars;
      c.dim = static_cast<int>(nv - vars.size());
      c.pass = c.dim >= bound;
      c.below_gkdim = r.gkdim && c.dim <= *r.gkdim;
      all = all && c.pass;
      r.upper_bound_holds = r.upper_bound_holds && c.below_gkdim;
      r.total_dim = std::max(r.total_dim.value_or(c.dim), c.dim);
      r.components.push_back(std::move(c));
    }
    r.verdict = all ? Verdict::pass : Verdict::fail;
    return r;
  }

  // Total dimension only, through the grevlex leading monomials.
  std::vector<Monomial> leads;
  for (const auto& g : r.ideal.initial) leads.push_back(lead_grevlex(g));
  r.total_dim = krull_dim_monomial(MonomialIdeal(nv, std::move(leads)), nv);
  if (!r.total_dim) {
    r.verdict = Verdict::vacuous_pass;
    return r;
  }
  r.upper_bound_holds = r.gkdim && *r.total_dim <= *r.gkdim;
  r.verdict = *r.total_dim >= bound ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace weylfan
