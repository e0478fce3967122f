#include "weylfan/rees.hpp"

namespace weylfan {

std::vector<Rational> ReesPresentation::grading() const {
  std::vector<Rational> g{Rational(1)};
  const auto f = weight.flat();
  g.insert(g.end(), f.begin(), f.end());
  return g;
}

Monomial lift_monomial(const Monomial& m, Monomial::Exponent x0_power) {
  Monomial r(m.size() + 1);
  r[0] = x0_power;
  for (std::size_t i = 0; i < m.size(); ++i) r[i + 1] = m[i];
  return r;
}

Monomial drop_x0(const Monomial& m) {
  Monomial r(m.size() - 1);
  for (std::size_t i = 1; i < m.size(); ++i) r[i - 1] = m[i];
  return r;
}

namespace {

SkewPoly padded(const SkewPoly& q, const std::vector<Rational>& w, const Rational& top, std::size_t nvars) {
  SkewPoly r(nvars);
  for (const auto& [mono, c] : q.terms()) {
    const Rational gap = top - dot(w, mono);
    r.add_term(lift_monomial(mono, static_cast<Monomial::Exponent>(gap.get_num().get_si())), c);
  }
  return r;
}

}  // namespace

ReesPresentation rees_presentation(const RingPresentation& p, const WeightVector& w) {
  if (w.size() != p.nvars()) throw Error(ErrorCode::dimension_mismatch, "weight vector length mismatch");
  if (!w.is_integral()) throw Error(ErrorCode::invalid_argument, "Rees construction needs an integer weight vector");
  if (!pr_contains(p, w)) throw Error(ErrorCode::region, "weight not in polynomial region");
  const std::vector<Rational> flat = w.flat();
  const std::size_t nv = p.nvars() + 1;
  RingPresentation::Table q1(p.n(), std::vector<SkewPoly>(p.m() + 1, SkewPoly(nv)));
  RingPresentation::Table q2(p.n(), std::vector<SkewPoly>(p.n(), SkewPoly(nv)));
  for (int i = 0; i < p.n(); ++i) {
    const Rational& vi = flat[p.y_var(i)];
    for (int j = 0; j < p.m(); ++j) {
      // the padding exponent is (u_j + v_i) - deg(Q1) >= 1 inside PR
      q1[i][j + 1] = padded(p.q1(i, j), flat, flat[p.x_var(j)] + vi, nv);
    }
    for (int j = 0; j < p.n(); ++j) q2[i][j] = padded(p.q2(i, j), flat, vi + flat[p.y_var(j)], nv);
  }
  return ReesPresentation{p, w, RingPresentation::create(p.m() + 1, p.n(), std::move(q1), std::move(q2), 0)};
}

SkewPoly homogenize(const ReesPresentation& rees, const SkewPoly& f) {
  if (f.nvars() != rees.base.nvars()) throw Error(ErrorCode::dimension_mismatch, "polynomial not over the base ring");
  const std::vector<Rational> flat = rees.weight.flat();
  const auto top = weighted_degree(flat, f);
  if (!top) return SkewPoly(rees.ring.nvars());
  return padded(f, flat, *top, rees.ring.nvars());
}

SkewPoly dehomogenize(const ReesPresentation& rees, const SkewPoly& f) {
  if (f.nvars() != rees.ring.nvars()) throw Error(ErrorCode::dimension_mismatch, "polynomial not over the Rees ring");
  SkewPoly r(rees.base.nvars());
  for (const auto& [mono, c] : f.terms()) r.add_term(drop_x0(mono), c);
  return r;
}

bool is_homogeneous(const std::vector<Rational>& grading, const SkewPoly& f) {
  std::optional<Rational> d;
  for (const auto& [mono, c] : f.terms()) {
    Rational e = dot(grading, mono);
    if (d && e != *d) return false;
    d = e;
  }
  return true;
}

}  // namespace weylfan
