#include "weylfan/filtration.hpp"

#include <algorithm>

namespace weylfan {

namespace {

void check_size(const RingPresentation& p, const WeightVector& w) {
  if (w.u.size() != static_cast<std::size_t>(p.m()) || w.v.size() != static_cast<std::size_t>(p.n())) {
    throw Error(ErrorCode::dimension_mismatch, "weight vector has length " + std::to_string(w.size()) +
                                                   ", presentation needs " + std::to_string(p.nvars()));
  }
}

template <class Poly>
std::optional<Rational> max_dot(const std::vector<Rational>& weights, const Poly& f) {
  std::optional<Rational> best;
  for (const auto& [m, c] : f.terms()) {
    Rational d = dot(weights, m);
    if (!best || d > *best) best = d;
  }
  return best;
}

}  // namespace

WeightVector WeightVector::from_flat(const RingPresentation& p, const std::vector<Rational>& flat) {
  if (flat.size() != p.nvars()) {
    throw Error(ErrorCode::dimension_mismatch, "weight vector has length " + std::to_string(flat.size()) +
                                                   ", presentation needs " + std::to_string(p.nvars()));
  }
  const auto m = static_cast<std::ptrdiff_t>(p.m());
  return WeightVector({flat.begin(), flat.begin() + m}, {flat.begin() + m, flat.end()});
}

std::vector<Rational> WeightVector::flat() const {
  std::vector<Rational> out(u);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool WeightVector::is_integral() const {
  const auto f = flat();
  return std::all_of(f.begin(), f.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool WeightVector::is_nonnegative() const {
  const auto f = flat();
  return std::all_of(f.begin(), f.end(), [](const Rational& q) { return q >= 0; });
}

bool WeightVector::is_positive() const {
  const auto f = flat();
  return std::all_of(f.begin(), f.end(), [](const Rational& q) { return q > 0; });
}

std::string to_string(const WeightVector& w) {
  std::string s;
  for (const auto& q : w.flat()) {
    if (!s.empty()) s += ',';
    s += to_string(q);
  }
  return s;
}

Rational dot(const std::vector<Rational>& weights, const Monomial& m) {
  Rational d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (m[i] != 0) d += weights[i] * m[i];
  }
  return d;
}

std::optional<Rational> degree(const RingPresentation& p, const SkewPoly& f, const WeightVector& w) {
  check_size(p, w);
  std::vector<Rational> ceiled;
  for (const auto& q : w.flat()) ceiled.emplace_back(ceil(q));
  return max_dot(ceiled, f);
}

std::optional<Rational> weighted_degree(const std::vector<Rational>& weights, const SkewPoly& f) {
  return max_dot(weights, f);
}

std::optional<Rational> weighted_degree(const std::vector<Rational>& weights, const CommPoly& f) {
  return max_dot(weights, f);
}

CommPoly initial_form(const CommPoly& f, const std::vector<Rational>& weights) {
  const auto top = max_dot(weights, f);
  if (!top) throw Error(ErrorCode::invalid_argument, "initial form of the zero polynomial");
  CommPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (dot(weights, m) == *top) r.add_term(m, c);
  }
  return r;
}

CommPoly initial_form(const RingPresentation& p, const SkewPoly& f, const WeightVector& w) {
  check_size(p, w);
  return initial_form(as_comm(f), w.flat());
}

Rational LinearForm::evaluate(const std::vector<Rational>& w) const {
  Rational s = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * w.at(i);
  return s;
}

bool HalfspaceSystem::contains(const std::vector<Rational>& w) const {
  return std::all_of(strict.begin(), strict.end(), [&](const LinearForm& l) { return l.evaluate(w) > 0; });
}

std::vector<std::string> weight_names(const RingPresentation& p) {
  std::vector<std::string> names;
  for (int j = 0; j < p.m(); ++j) names.push_back("u" + std::to_string(j + p.first_x_label()));
  for (int i = 0; i < p.n(); ++i) names.push_back("v" + std::to_string(i + 1));
  return names;
}

std::string format_linear_inequality(const std::vector<Rational>& coeffs, const std::vector<std::string>& names,
                                     const std::string& relation) {
  auto side = [&](int sign) {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Rational c = coeffs[i] * sign;
      if (c <= 0) continue;
      if (!s.empty()) s += '+';
      if (c != 1) s += to_string(c) + '*';
      s += names.at(i);
    }
    return s.empty() ? std::string("0") : s;
  };
  return side(1) + relation + side(-1);
}

std::vector<std::string> format_inequalities(const HalfspaceSystem& h, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& l : h.strict) out.push_back(format_linear_inequality(l.coeffs, names, ">"));
  return out;
}

HalfspaceSystem pr_halfspaces(const RingPresentation& p) {
  const std::size_t nv = p.nvars();
  std::vector<std::vector<Rational>> forms;
  auto add = [&](const Monomial& product, const SkewPoly& relation) {
    for (const auto& [mono, c] : relation.terms()) {
      std::vector<Rational> form(nv);
      for (std::size_t k = 0; k < nv; ++k) form[k] = product[k] - mono[k];
      if (std::find(forms.begin(), forms.end(), form) == forms.end()) forms.push_back(std::move(form));
    }
  };
  for (int i = 0; i < p.n(); ++i) {
    for (int j = 0; j < p.m(); ++j) {
      Monomial prod(nv);
      prod[p.x_var(j)] = 1;
      prod[p.y_var(i)] = 1;
      add(prod, p.q1(i, j));
    }
    for (int j = 0; j < p.n(); ++j) {
      if (i == j) continue;
      Monomial prod(nv);
      prod[p.y_var(i)] += 1;
      prod[p.y_var(j)] += 1;
      add(prod, p.q2(i, j));
    }
  }
  std::sort(forms.begin(), forms.end(), std::greater<>());
  HalfspaceSystem h;
  for (auto& f : forms) h.strict.push_back({std::move(f), 0});
  return h;
}

bool pr_contains(const RingPresentation& p, const WeightVector& w) {
  check_size(p, w);
  return pr_halfspaces(p).contains(w.flat());
}

WeightVector pr_sample_positive(const RingPresentation& p) {
  long long max_x_degree = 0;
  auto scan = [&](const SkewPoly& e) {
    for (const auto& [mono, c] : e.terms()) {
      long long d = 0;
      for (int j = 0; j < p.m(); ++j) d += mono[p.x_var(j)];
      max_x_degree = std::max(max_x_degree, d);
    }
  };
  for (const auto& row : p.q1_table()) std::for_each(row.begin(), row.end(), scan);
  for (const auto& row : p.q2_table()) std::for_each(row.begin(), row.end(), scan);
  const Rational scale(static_cast<long>(max_x_degree + 1));
  return WeightVector(std::vector<Rational>(static_cast<std::size_t>(p.m()), Rational(1)),
                      std::vector<Rational>(static_cast<std::size_t>(p.n()), scale));
}

}  // namespace weylfan
