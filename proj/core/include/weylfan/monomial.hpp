#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace weylfan {

/// Exponent vector of a standard monomial x^a y^b, stored flat with the
/// x-block first. The same encoding is used for monomials of the
/// commutative ring S = k[xbar, ybar].
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 14;
  using Exponent = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  std::size_t size() const noexcept { return size_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  Exponent& operator[](std::size_t i) noexcept { return exps_[i]; }

  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), size_}; }

  std::int64_t total_degree() const noexcept;
  bool is_one() const noexcept;

  /// True iff every exponent of *this is <= the matching exponent of other.
  bool divides(const Monomial& other) const noexcept;

  /// Variables with a nonzero exponent.
  std::vector<std::size_t> support() const;

  Monomial operator*(const Monomial& other) const noexcept;
  /// Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const noexcept;

  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
  friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.size_ == b.size_ && std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
  }
  /// Plain lexicographic comparison on exponent vectors; used only for
  /// storage. Monomial orders live in order.hpp.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t i = 0; i < a.size_; ++i) {
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t size_ = 0;
};

Monomial unit_monomial(std::size_t nvars, std::size_t var, Monomial::Exponent power = 1);

}  // namespace weylfan

template <>
struct std::hash<weylfan::Monomial> {
  std::size_t operator()(const weylfan::Monomial& m) const noexcept { return m.hash(); }
};
