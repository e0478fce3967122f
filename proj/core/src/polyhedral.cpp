#include "weylfan/polyhedral.hpp"

#include <algorithm>
#include <set>

#include "weylfan/error.hpp"

namespace weylfan {

namespace {

struct Row {
  std::vector<Rational> a;  // coefficients on the original variables
  Rational c;
  Relation rel;
};

bool holds(const Rational& value, Relation rel) {
  switch (rel) {
    case Relation::eq:
      return value == 0;
    case Relation::gt:
      return value > 0;
    case Relation::ge:
      return value >= 0;
  }
  return false;
}

// Positive rescaling of (a, c) to a primitive integer row, for deduplication.
void normalize(Row& r) {
  std::vector<Rational> all(r.a);
  all.push_back(r.c);
  const auto ints = primitive_integer_vector(all);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = Rational(ints[i]);
  r.c = Rational(ints.back());
}

bool is_trivial(const Row& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](const Rational& q) { return q == 0; });
}

struct RowKey {
  bool operator()(const Row& x, const Row& y) const {
    if (x.rel != y.rel) return x.rel < y.rel;
    if (x.c != y.c) return x.c < y.c;
    return x.a < y.a;
  }
};

struct Substitution {
  std::size_t var;
  std::vector<Rational> a;  // var = a . w + c
  Rational c;
};

struct Elimination {
  std::size_t var;
  std::vector<Row> bounds;
};

}  // namespace

bool satisfies(const std::vector<Rational>& w, const Constraint& c) {
  Rational s = c.constant;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) s += c.coeffs[i] * w[i];
  return holds(s, c.rel);
}

std::optional<std::vector<Rational>> find_point(std::size_t dim, const std::vector<Constraint>& constraints,
                                                std::size_t max_rows) {
  std::vector<Row> eqs;
  std::vector<Row> ineqs;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != dim) throw Error(ErrorCode::dimension_mismatch, "constraint has the wrong dimension");
    Row r{c.coeffs, c.constant, c.rel};
    (c.rel == Relation::eq ? eqs : ineqs).push_back(std::move(r));
  }

  auto substitute = [dim](Row& r, const Substitution& s) {
    const Rational k = r.a[s.var];
    if (k == 0) return;
    r.a[s.var] = 0;
    for (std::size_t i = 0; i < dim; ++i) r.a[i] += k * s.a[i];
    r.c += k * s.c;
  };

  std::vector<Substitution> subs;
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Row& r = eqs[e];
    std::size_t pivot = dim;
    for (std::size_t i = 0; i < dim; ++i) {
      if (r.a[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == dim) {
      if (r.c != 0) return std::nullopt;
      continue;
    }
    Substitution s{pivot, std::vector<Rational>(dim), -r.c / r.a[pivot]};
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != pivot) s.a[i] = -r.a[i] / r.a[pivot];
    }
    for (std::size_t f = e + 1; f < eqs.size(); ++f) substitute(eqs[f], s);
    for (auto& q : ineqs) substitute(q, s);
    subs.push_back(std::move(s));
  }

  std::vector<bool> eliminated(dim, false);
  for (const auto& s : subs) eliminated[s.var] = true;

  auto clean = [&](std::vector<Row>& rows) -> bool {
    std::set<Row, RowKey> seen;
    std::vector<Row> out;
    for (auto& r : rows) {
      if (is_trivial(r)) {
        if (!holds(r.c, r.rel)) return false;
        continue;
      }
      normalize(r);
      if (seen.insert(r).second) out.push_back(std::move(r));
    }
    rows = std::move(out);
    return true;
  };

  if (!clean(ineqs)) return std::nullopt;

  std::vector<Elimination> history;
  while (true) {
    // choose the variable with the cheapest elimination
    std::size_t best = dim;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < dim; ++v) {
      if (eliminated[v]) continue;
      std::size_t pos = 0;
      std::size_t neg = 0;
      for (const auto& r : ineqs) {
        if (r.a[v] > 0) ++pos;
        if (r.a[v] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      const std::size_t cost = pos * neg;
      if (best == dim || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    if (best == dim) break;
    Elimination step{best, {}};
    std::vector<Row> pos;
    std::vector<Row> neg;
    std::vector<Row> next;
    for (auto& r : ineqs) {
      if (r.a[best] > 0) {
        pos.push_back(r);
      } else if (r.a[best] < 0) {
        neg.push_back(r);
      } else {
        next.push_back(r);
      }
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Row r{std::vector<Rational>(dim), p.c * (-q.a[best]) + q.c * p.a[best],
              (p.rel == Relation::gt || q.rel == Relation::gt) ? Relation::gt : Relation::ge};
        for (std::size_t i = 0; i < dim; ++i) r.a[i] = p.a[i] * (-q.a[best]) + q.a[i] * p.a[best];
        r.a[best] = 0;
        next.push_back(std::move(r));
      }
    }
    if (next.size() > max_rows) throw Error(ErrorCode::budget, "Fourier-Motzkin row budget exceeded");
    step.bounds = std::move(pos);
    step.bounds.insert(step.bounds.end(), neg.begin(), neg.end());
    history.push_back(std::move(step));
    eliminated[best] = true;
    ineqs = std::move(next);
    if (!clean(ineqs)) return std::nullopt;
  }
  if (!ineqs.empty()) {
    // only rows without variables survive; clean() has checked them
    ineqs.clear();
  }

  std::vector<Rational> w(dim, Rational(0));
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    const std::size_t v = it->var;
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_strict = false;
    bool hi_strict = false;
    for (const auto& r : it->bounds) {
      Rational rest = r.c;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i != v) rest += r.a[i] * w[i];
      }
      const Rational bound = -rest / r.a[v];
      const bool strict = r.rel == Relation::gt;
      if (r.a[v] > 0) {
        if (!lo || bound > *lo || (bound == *lo && strict)) {
          lo = bound;
          lo_strict = strict;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && strict)) {
          hi = bound;
          hi_strict = strict;
        }
      }
    }
    std::optional<Integer> lo_int;
    std::optional<Integer> hi_int;
    if (lo) lo_int = lo_strict ? Integer(floor(*lo) + 1) : ceil(*lo);
    if (hi) hi_int = hi_strict ? Integer(ceil(*hi) - 1) : floor(*hi);
    if (!lo_int || !hi_int || *lo_int <= *hi_int) {
      Integer pick = 0;
      if (lo_int && pick < *lo_int) pick = *lo_int;
      if (hi_int && pick > *hi_int) pick = *hi_int;
      w[v] = Rational(pick);
    } else if (lo_strict || hi_strict) {
      w[v] = (*lo + *hi) / 2;
    } else {
      w[v] = *lo;
    }
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational value = it->c;
    for (std::size_t i = 0; i < dim; ++i) value += it->a[i] * w[i];
    w[it->var] = value;
  }
  for (const auto& c : constraints) {
    if (!satisfies(w, c)) throw Error(ErrorCode::verification, "Fourier-Motzkin witness violates a constraint");
  }
  return w;
}

std::vector<Rational> primitive(const std::vector<Rational>& v) {
  std::vector<Rational> out;
  for (auto& z : primitive_integer_vector(v)) out.emplace_back(z);
  return out;
}

bool OpenCone::contains(const std::vector<Rational>& w) const {
  for (const auto& c : constraints()) {
    if (!satisfies(w, c)) return false;
  }
  return true;
}

std::vector<Constraint> OpenCone::constraints() const {
  std::vector<Constraint> out;
  for (const auto& e : equalities) out.push_back({e, 0, Relation::eq});
  for (const auto& s : strict) out.push_back({s, 0, Relation::gt});
  return out;
}

std::optional<std::vector<Rational>> OpenCone::interior_point() const { return find_point(dim, constraints()); }

std::vector<std::size_t> irredundant_rows(const OpenCone& cone) {
  std::vector<std::size_t> keep;
  if (!cone.interior_point()) {
    for (std::size_t i = 0; i < cone.strict.size(); ++i) keep.push_back(i);
    return keep;
  }
  std::vector<bool> active(cone.strict.size(), true);
  for (std::size_t i = 0; i < cone.strict.size(); ++i) {
    std::vector<Constraint> cs;
    for (const auto& e : cone.equalities) cs.push_back({e, 0, Relation::eq});
    for (std::size_t j = 0; j < cone.strict.size(); ++j) {
      if (j != i && active[j]) cs.push_back({cone.strict[j], 0, Relation::gt});
    }
    std::vector<Rational> neg(cone.strict[i]);
    for (auto& q : neg) q = -q;
    cs.push_back({neg, 0, Relation::ge});
    if (is_feasible(cone.dim, cs)) {
      keep.push_back(i);
    } else {
      active[i] = false;
    }
  }
  return keep;
}

OpenCone OpenCone::canonical() const {
  OpenCone out;
  out.dim = dim;
  // reduced row echelon form of the equalities
  std::vector<std::vector<Rational>> rows = equalities;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = Rational(1) / rows[r][col];
    for (auto& q : rows[r]) q *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][col] == 0) continue;
      const Rational f = rows[k][col];
      for (std::size_t i = 0; i < dim; ++i) rows[k][i] -= f * rows[r][i];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  for (auto& row : rows) out.equalities.push_back(primitive(row));

  std::set<std::vector<Rational>> strict_set;
  for (auto s : strict) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational f = s[pivots[k]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < dim; ++i) s[i] -= f * rows[k][i];
    }
    strict_set.insert(primitive(s));
  }
  OpenCone tmp{dim, out.equalities, {strict_set.begin(), strict_set.end()}};
  for (auto i : irredundant_rows(tmp)) out.strict.push_back(tmp.strict[i]);
  std::sort(out.strict.begin(), out.strict.end());
  return out;
}

}  // namespace weylfan
