#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "weylfan/polynomial.hpp"

namespace weylfan {

namespace detail {
class ProductCache;
}

/// Presentation of an almost centralizing extension R of B = k[x_1..x_m] by
/// generators y_1..y_n:
///
///   y_i x_j - x_j y_i = Q1(i,j)          (a polynomial in x only)
///   y_i y_j - y_j y_i = Q2(i,j)          (at most linear in y)
///
/// Variables are numbered flat: x_j is variable j, y_i is variable m + i
/// (0-based). Table entries are SkewPoly values over all m + n variables.
///
/// Presentations are immutable. Copies share a product cache that memoizes
/// generator-by-monomial products; the cache is internally synchronized.
class RingPresentation {
 public:
  using Table = std::vector<std::vector<SkewPoly>>;

  /// q1 is n x m, q2 is n x n. Throws Error(invalid_argument) if a Q1 entry
  /// involves y, or a Q2 entry has y-degree above one. Antisymmetry of Q2 is
  /// not enforced here; validate_presentation reports it.
  static RingPresentation create(int m, int n, Table q1, Table q2, int first_x_label = 1);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::size_t nvars() const noexcept { return static_cast<std::size_t>(m_ + n_); }

  const SkewPoly& q1(int i, int j) const { return q1_.at(i).at(j); }
  const SkewPoly& q2(int i, int j) const { return q2_.at(i).at(j); }
  const Table& q1_table() const noexcept { return q1_; }
  const Table& q2_table() const noexcept { return q2_; }

  bool is_commutative() const noexcept { return commutative_; }

  std::size_t x_var(int j) const noexcept { return static_cast<std::size_t>(j); }
  std::size_t y_var(int i) const noexcept { return static_cast<std::size_t>(m_ + i); }
  bool is_y(std::size_t var) const noexcept { return var >= static_cast<std::size_t>(m_); }

  /// Label of the first x generator: 1 normally, 0 for Rees rings where x_0
  /// is the homogenizing variable.
  int first_x_label() const noexcept { return first_x_label_; }
  std::string var_name(std::size_t var) const;
  std::vector<std::string> var_names() const;

  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.first_x_label_ == b.first_x_label_ && a.q1_ == b.q1_ &&
           a.q2_ == b.q2_;
  }

  detail::ProductCache& cache() const { return *cache_; }

 private:
  RingPresentation() = default;

  int m_ = 0;
  int n_ = 0;
  int first_x_label_ = 1;
  bool commutative_ = true;
  Table q1_;
  Table q2_;
  std::shared_ptr<detail::ProductCache> cache_;
};

/// Weyl algebra A_n: y_i x_j - x_j y_i = delta_ij, y's commute.
RingPresentation weyl_presentation(int n);

/// U(sl2) with basis y1, y2, y3:
/// [y2,y3] = 2 y3, [y2,y1] = -2 y1, [y1,y3] = y2.
RingPresentation sl2_presentation();

/// Polynomial ring in m + n commuting variables (all tables zero).
RingPresentation commutative_presentation(int m, int n);

/// The associated graded ring S: same variables, everything commutes.
inline RingPresentation symbol_ring(const RingPresentation& p) { return commutative_presentation(p.m(), p.n()); }

/// Standard expression of f * g.
SkewPoly multiply(const RingPresentation& p, const SkewPoly& f, const SkewPoly& g);

/// Standard expression of the monomial product m1 * m2 (both standard).
SkewPoly multiply_monomials(const RingPresentation& p, const Monomial& m1, const Monomial& m2);

enum class RewriteStrategy { leftmost, rightmost, random };

/// Normalizes a word in the generators (flat variable indices) by rewriting
/// adjacent inversions with the defining relations. Uses an explicit work
/// stack; `seed` drives the choice of inversion for RewriteStrategy::random.
/// Throws Error(budget) after `max_steps` rewrites.
SkewPoly normalize_word(const RingPresentation& p, std::span<const std::size_t> word,
                        RewriteStrategy strategy = RewriteStrategy::leftmost, std::uint64_t seed = 0,
                        std::size_t max_steps = 1'000'000);

/// Necessary consistency check of the relation tables: Q2 antisymmetric with
/// zero diagonal, and for every generator triple the two bracketings (and two
/// rewriting strategies) give the same standard expression. Not a proof of
/// the PBW property.
bool validate_presentation(const RingPresentation& p);

}  // namespace weylfan
