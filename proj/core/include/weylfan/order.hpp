#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylfan/monomial.hpp"
#include "weylfan/rational.hpp"

namespace weylfan {

enum class BaseOrder { lex, grlex, grevlex };

std::string to_string(BaseOrder b);
BaseOrder parse_base_order(const std::string& name);

/// Multiplicative order on standard monomials: a sequence of weight vectors
/// compared lexicographically, then a base term order on a variable priority
/// list (priority[0] is the most significant variable).
///
/// A lifted order lives on a Rees ring (variable 0 is x0): the remaining
/// variables are compared by the underlying order first, ties go to the
/// smaller power of x0.
class MonomialOrder {
 public:
  explicit MonomialOrder(std::size_t nvars, BaseOrder base = BaseOrder::grevlex,
                         std::vector<std::size_t> priority = {});

  /// The order <_w: compare by w first, ties broken by *this.
  MonomialOrder refined_by(const std::vector<Rational>& weight) const;

  /// Lift to the Rees ring with x0 prepended.
  MonomialOrder lifted() const;

  /// -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// True iff 1 is the smallest monomial (no infinite descending chains).
  bool is_term_order() const;

  std::size_t nvars() const noexcept { return nvars_; }
  BaseOrder base() const noexcept { return base_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  const std::vector<std::vector<Rational>>& weights() const noexcept { return weights_; }
  bool is_lifted() const noexcept { return lifted_; }

  std::string describe() const;

 private:
  int compare_core(const Monomial& a, const Monomial& b, std::size_t offset) const;

  std::size_t nvars_;
  BaseOrder base_;
  std::vector<std::size_t> priority_;
  std::vector<std::vector<Rational>> weights_;
  std::vector<std::vector<std::int64_t>> scaled_;
  bool lifted_ = false;
};

/// Functor usable as a std::map comparator; the largest monomial sorts last.
struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) < 0; }
};

}  // namespace weylfan
