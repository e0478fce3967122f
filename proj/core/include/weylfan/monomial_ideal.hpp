#pragma once

#include <string>
#include <vector>

#include "weylfan/monomial.hpp"

namespace weylfan {

/// Monomial ideal of S given by its minimal generators (an antichain under
/// divisibility, kept sorted). The unit ideal is generated by the monomial 1;
/// the zero ideal has no generators.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars = 0) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool contains(const Monomial& m) const;
  bool is_unit() const;
  bool is_zero() const noexcept { return gens_.empty(); }

  /// J : m
  MonomialIdeal quotient(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Intersection via pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

std::string to_string(const MonomialIdeal& j, const std::vector<std::string>& names);
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace weylfan
