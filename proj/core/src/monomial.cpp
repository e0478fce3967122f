#include "weylfan/monomial.hpp"

#include <numeric>

#include "weylfan/error.hpp"

namespace weylfan {

Monomial::Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) {
    throw Error(ErrorCode::invalid_argument, "too many variables (max " + std::to_string(kMaxVars) + ")");
  }
}

Monomial::Monomial(std::initializer_list<Exponent> exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), exps_.begin());
}

Monomial::Monomial(std::span<const Exponent> exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), exps_.begin());
}

std::int64_t Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.begin() + size_, std::int64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.begin() + size_, [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const noexcept {
  Monomial r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const noexcept {
  Monomial r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r = a;
  for (std::size_t i = 0; i < a.size_; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r = a;
  for (std::size_t i = 0; i < a.size_; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= static_cast<std::size_t>(exps_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Monomial unit_monomial(std::size_t nvars, std::size_t var, Monomial::Exponent power) {
  Monomial m(nvars);
  m[var] = power;
  return m;
}

}  // namespace weylfan
