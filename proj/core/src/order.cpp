#include "weylfan/order.hpp"

#include <limits>
#include <numeric>

#include "weylfan/error.hpp"

namespace weylfan {

namespace {
__extension__ using Int128 = __int128;
}

std::string to_string(BaseOrder b) {
  switch (b) {
    case BaseOrder::lex:
      return "lex";
    case BaseOrder::grlex:
      return "grlex";
    case BaseOrder::grevlex:
      return "grevlex";
  }
  return "?";
}

BaseOrder parse_base_order(const std::string& name) {
  if (name == "lex") return BaseOrder::lex;
  if (name == "grlex") return BaseOrder::grlex;
  if (name == "grevlex" || name == "revlex") return BaseOrder::grevlex;
  throw Error(ErrorCode::parse, "unknown order '" + name + "' (expected lex, grlex or grevlex)");
}

MonomialOrder::MonomialOrder(std::size_t nvars, BaseOrder base, std::vector<std::size_t> priority)
    : nvars_(nvars), base_(base), priority_(std::move(priority)) {
  if (priority_.empty()) {
    priority_.resize(nvars);
    std::iota(priority_.begin(), priority_.end(), std::size_t{0});
  }
  std::vector<std::size_t> check = priority_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i || check.size() != nvars) {
      throw Error(ErrorCode::invalid_argument, "variable priority must be a permutation");
    }
  }
}

MonomialOrder MonomialOrder::refined_by(const std::vector<Rational>& weight) const {
  const std::size_t expected = lifted_ ? nvars_ - 1 : nvars_;
  if (weight.size() != expected) throw Error(ErrorCode::dimension_mismatch, "weight length does not match order");
  std::vector<Integer> ints = primitive_integer_vector(weight);
  std::vector<std::int64_t> scaled;
  for (const auto& z : ints) {
    if (!z.fits_slong_p() || abs(z) > Integer(1) << 40) {
      throw Error(ErrorCode::budget, "weight vector entries too large for exact comparison");
    }
    scaled.push_back(z.get_si());
  }
  MonomialOrder r = *this;
  r.weights_.insert(r.weights_.begin(), weight);
  r.scaled_.insert(r.scaled_.begin(), std::move(scaled));
  return r;
}

MonomialOrder MonomialOrder::lifted() const {
  if (lifted_) throw Error(ErrorCode::invalid_argument, "order is already lifted");
  MonomialOrder r = *this;
  r.nvars_ = nvars_ + 1;
  r.lifted_ = true;
  return r;
}

int MonomialOrder::compare_core(const Monomial& a, const Monomial& b, std::size_t offset) const {
  for (const auto& w : scaled_) {
    Int128 da = 0;
    Int128 db = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      da += static_cast<Int128>(w[i]) * a[i + offset];
      db += static_cast<Int128>(w[i]) * b[i + offset];
    }
    if (da != db) return da < db ? -1 : 1;
  }
  if (base_ != BaseOrder::lex) {
    std::int64_t ta = 0;
    std::int64_t tb = 0;
    for (std::size_t i = offset; i < a.size(); ++i) {
      ta += a[i];
      tb += b[i];
    }
    if (ta != tb) return ta < tb ? -1 : 1;
  }
  if (base_ == BaseOrder::grevlex) {
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
      const auto ea = a[*it + offset];
      const auto eb = b[*it + offset];
      if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
  }
  for (auto v : priority_) {
    const auto ea = a[v + offset];
    const auto eb = b[v + offset];
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (!lifted_) return compare_core(a, b, 0);
  const int c = compare_core(a, b, 1);
  if (c != 0) return c;
  if (a[0] != b[0]) return a[0] > b[0] ? -1 : 1;
  return 0;
}

bool MonomialOrder::is_term_order() const {
  if (lifted_) return false;
  for (std::size_t v = 0; v < nvars_; ++v) {
    for (const auto& w : scaled_) {
      if (w[v] < 0) return false;
      if (w[v] > 0) break;
    }
  }
  return true;
}

std::string MonomialOrder::describe() const {
  std::string s;
  for (const auto& w : weights_) {
    s += "weight(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
    s += ")+";
  }
  s += to_string(base_);
  bool identity = true;
  for (std::size_t i = 0; i < priority_.size(); ++i) identity = identity && priority_[i] == i;
  if (!identity) {
    s += "[";
    for (std::size_t i = 0; i < priority_.size(); ++i) s += (i ? "," : "") + std::to_string(priority_[i]);
    s += "]";
  }
  if (lifted_) s = "lift(" + s + ")";
  return s;
}

}  // namespace weylfan
