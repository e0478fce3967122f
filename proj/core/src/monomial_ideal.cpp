#include "weylfan/monomial_ideal.hpp"

#include <algorithm>

#include "weylfan/error.hpp"

namespace weylfan {

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw Error(ErrorCode::dimension_mismatch, "generator has the wrong number of variables");
  }
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.total_degree() != b.total_degree() ? a.total_degree() < b.total_degree() : a < b; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_unit() const { return contains(Monomial(nvars_)); }

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(g / gcd(g, m));
  return MonomialIdeal(nvars_, std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> out;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) out.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.nvars(), std::move(out));
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names.at(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? std::string("1") : s;
}

std::string to_string(const MonomialIdeal& j, const std::vector<std::string>& names) {
  std::string s = "<";
  for (std::size_t i = 0; i < j.generators().size(); ++i) {
    if (i) s += ", ";
    s += monomial_to_string(j.generators()[i], names);
  }
  if (j.generators().empty()) s += "0";
  return s + ">";
}

}  // namespace weylfan
