#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "weylfan/error.hpp"
#include "weylfan/monomial.hpp"
#include "weylfan/rational.hpp"

namespace weylfan {

struct SkewTag {};
struct CommTag {};

/// Finite map monomial -> nonzero rational coefficient. Storage order is the
/// plain lexicographic order on exponent vectors, so iteration (and hence
/// printing) is deterministic.
///
/// The tag separates elements of the skew ring R (standard expressions) from
/// elements of the commutative ring S = gr(R); the encodings agree, the
/// multiplication does not.
template <class Tag>
class BasicPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  BasicPoly() = default;
  explicit BasicPoly(std::size_t nvars) : nvars_(nvars) {}
  BasicPoly(std::size_t nvars, Terms terms) : nvars_(nvars) {
    for (auto& [m, c] : terms) add_term(m, c);
  }

  static BasicPoly constant(std::size_t nvars, const Rational& c) {
    BasicPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static BasicPoly monomial(const Monomial& m, const Rational& c = 1) {
    BasicPoly p(m.size());
    p.add_term(m, c);
    return p;
  }
  static BasicPoly variable(std::size_t nvars, std::size_t var) {
    return monomial(unit_monomial(nvars, var));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) {
      throw Error(ErrorCode::dimension_mismatch, "monomial has the wrong number of variables");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) { return a *= Rational(-1); }
  friend BasicPoly operator*(BasicPoly a, const Rational& s) { return a *= s; }
  friend BasicPoly operator*(const Rational& s, BasicPoly a) { return a *= s; }
  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Multiplies every monomial by m on the left. In R this is only the ring
  /// product when m is a pure x-monomial; callers in the skew ring use it for
  /// exactly that case.
  BasicPoly shifted(const Monomial& m) const {
    BasicPoly r(nvars_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono * m, c);
    return r;
  }

 private:
  void check_same(const BasicPoly& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorCode::dimension_mismatch, "polynomials live in different rings");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Element of R in its unique standard expression sum k_{a,b} x^a y^b.
using SkewPoly = BasicPoly<SkewTag>;
/// Element of the commutative ring S.
using CommPoly = BasicPoly<CommTag>;

/// Reinterprets coefficients on the same monomials (x^a y^b -> xbar^a ybar^b).
inline CommPoly as_comm(const SkewPoly& f) { return CommPoly(f.nvars(), f.terms()); }
inline SkewPoly as_skew(const CommPoly& f) { return SkewPoly(f.nvars(), f.terms()); }

/// Commutative product in S.
CommPoly multiply(const CommPoly& f, const CommPoly& g);

}  // namespace weylfan
