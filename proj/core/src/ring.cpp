#include "weylfan/ring.hpp"

#include <mutex>
#include <optional>
#include <random>
#include <unordered_map>

namespace weylfan {

namespace detail {

struct KeyedMonomial {
  std::size_t key;
  Monomial mono;
  friend bool operator==(const KeyedMonomial&, const KeyedMonomial&) = default;
};

struct KeyedMonomialHash {
  std::size_t operator()(const KeyedMonomial& k) const noexcept { return k.mono.hash() * 31 + k.key; }
};

struct MonomialPair {
  Monomial left;
  Monomial right;
  friend bool operator==(const MonomialPair&, const MonomialPair&) = default;
};

struct MonomialPairHash {
  std::size_t operator()(const MonomialPair& k) const noexcept { return k.left.hash() * 1000003 ^ k.right.hash(); }
};

/// Memoized y_k * (standard monomial) and (y-monomial) * (standard monomial).
class ProductCache {
 public:
  std::optional<SkewPoly> find_generator(std::size_t k, const Monomial& m) {
    std::lock_guard lock(mutex_);
    auto it = generator_.find({k, m});
    if (it == generator_.end()) return std::nullopt;
    return it->second;
  }
  void store_generator(std::size_t k, const Monomial& m, const SkewPoly& value) {
    std::lock_guard lock(mutex_);
    generator_.emplace(KeyedMonomial{k, m}, value);
  }
  std::optional<SkewPoly> find_product(const Monomial& left, const Monomial& right) {
    std::lock_guard lock(mutex_);
    auto it = product_.find({left, right});
    if (it == product_.end()) return std::nullopt;
    return it->second;
  }
  void store_product(const Monomial& left, const Monomial& right, const SkewPoly& value) {
    std::lock_guard lock(mutex_);
    if (product_.size() > kMaxProducts) product_.clear();
    product_.emplace(MonomialPair{left, right}, value);
  }

 private:
  static constexpr std::size_t kMaxProducts = 200'000;
  std::mutex mutex_;
  std::unordered_map<KeyedMonomial, SkewPoly, KeyedMonomialHash> generator_;
  std::unordered_map<MonomialPair, SkewPoly, MonomialPairHash> product_;
};

}  // namespace detail

namespace {

constexpr int kMaxRecursion = 4096;

SkewPoly zero_table_entry(std::size_t nvars) { return SkewPoly(nvars); }

std::size_t y_degree(const RingPresentation& p, const Monomial& mono) {
  std::size_t d = 0;
  for (int i = 0; i < p.n(); ++i) d += static_cast<std::size_t>(mono[p.y_var(i)]);
  return d;
}

Monomial x_part(const RingPresentation& p, const Monomial& mono) {
  Monomial r = mono;
  for (int i = 0; i < p.n(); ++i) r[p.y_var(i)] = 0;
  return r;
}

Monomial y_part(const RingPresentation& p, const Monomial& mono) {
  Monomial r = mono;
  for (int j = 0; j < p.m(); ++j) r[p.x_var(j)] = 0;
  return r;
}

void add_scaled(SkewPoly& target, const SkewPoly& source, const Rational& scale) {
  for (const auto& [m, c] : source.terms()) target.add_term(m, c * scale);
}

// y_k * mono, with mono standard. Relies on ad(y_k) acting as a derivation on
// B with values Q1(k, .) in B, so y_k x^a = x^a y_k + sum_j a_j x^{a-e_j} Q1(k,j).
SkewPoly times_generator(const RingPresentation& p, std::size_t k, const Monomial& mono, int depth);

SkewPoly times_generator_poly(const RingPresentation& p, std::size_t k, const SkewPoly& f, int depth) {
  SkewPoly r(p.nvars());
  for (const auto& [m, c] : f.terms()) add_scaled(r, times_generator(p, k, m, depth), c);
  return r;
}

SkewPoly times_generator_uncached(const RingPresentation& p, std::size_t k, const Monomial& mono, int depth) {
  const Monomial xs = x_part(p, mono);
  if (!xs.is_one()) {
    const Monomial ys = y_part(p, mono);
    SkewPoly r = times_generator(p, k, ys, depth).shifted(xs);
    for (int j = 0; j < p.m(); ++j) {
      const auto a = xs[p.x_var(j)];
      const SkewPoly& q = p.q1(static_cast<int>(k), j);
      if (a == 0 || q.is_zero()) continue;
      Monomial lowered = xs;
      lowered[p.x_var(j)] -= 1;
      lowered = lowered * ys;
      for (const auto& [qm, qc] : q.terms()) r.add_term(qm * lowered, qc * a);
    }
    return r;
  }

  // Pure y-monomial: move y_k past the smallest y_l (l < k) present.
  int l = -1;
  for (int i = 0; i < static_cast<int>(k); ++i) {
    if (mono[p.y_var(i)] > 0) {
      l = i;
      break;
    }
  }
  if (l < 0) {
    Monomial r = mono;
    r[p.y_var(static_cast<int>(k))] += 1;
    return SkewPoly::monomial(r);
  }
  Monomial rest = mono;
  rest[p.y_var(l)] -= 1;
  // y_k y_l rest = y_l (y_k rest) + Q2(k,l) rest
  SkewPoly r = times_generator_poly(p, static_cast<std::size_t>(l), times_generator(p, k, rest, depth), depth);
  for (const auto& [qm, qc] : p.q2(static_cast<int>(k), l).terms()) {
    const Monomial qx = x_part(p, qm);
    int ell = -1;
    for (int i = 0; i < p.n(); ++i) {
      if (qm[p.y_var(i)] > 0) ell = i;
    }
    if (ell < 0) {
      r.add_term(qx * rest, qc);
    } else {
      add_scaled(r, times_generator(p, static_cast<std::size_t>(ell), rest, depth).shifted(qx), qc);
    }
  }
  return r;
}

SkewPoly times_generator(const RingPresentation& p, std::size_t k, const Monomial& mono, int depth) {
  if (depth > kMaxRecursion) {
    throw Error(ErrorCode::budget, "normalization recursion limit exceeded; relation tables are not PBW");
  }
  auto& cache = p.cache();
  if (auto hit = cache.find_generator(k, mono)) return *std::move(hit);
  SkewPoly r = times_generator_uncached(p, k, mono, depth + 1);
  cache.store_generator(k, mono, r);
  return r;
}

}  // namespace

RingPresentation RingPresentation::create(int m, int n, Table q1, Table q2, int first_x_label) {
  if (m < 0 || n < 0) throw Error(ErrorCode::invalid_argument, "generator counts must be nonnegative");
  const auto nvars = static_cast<std::size_t>(m + n);
  if (nvars > Monomial::kMaxVars) throw Error(ErrorCode::invalid_argument, "too many generators");
  if (q1.empty()) q1.assign(static_cast<std::size_t>(n), std::vector<SkewPoly>(static_cast<std::size_t>(m), zero_table_entry(nvars)));
  if (q2.empty()) q2.assign(static_cast<std::size_t>(n), std::vector<SkewPoly>(static_cast<std::size_t>(n), zero_table_entry(nvars)));
  if (q1.size() != static_cast<std::size_t>(n) || q2.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::dimension_mismatch, "relation tables must have n rows");
  }
  RingPresentation p;
  p.m_ = m;
  p.n_ = n;
  p.first_x_label_ = first_x_label;
  for (int i = 0; i < n; ++i) {
    if (q1[i].size() != static_cast<std::size_t>(m) || q2[i].size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::dimension_mismatch, "relation table row has the wrong length");
    }
    for (const auto& e : q1[i]) {
      if (e.nvars() != nvars) throw Error(ErrorCode::dimension_mismatch, "Q1 entry over the wrong ring");
      for (const auto& [mono, c] : e.terms()) {
        if (y_degree(p, mono) != 0) throw Error(ErrorCode::invalid_argument, "Q1 entries must be polynomials in x");
      }
      if (!e.is_zero()) p.commutative_ = false;
    }
    for (const auto& e : q2[i]) {
      if (e.nvars() != nvars) throw Error(ErrorCode::dimension_mismatch, "Q2 entry over the wrong ring");
      for (const auto& [mono, c] : e.terms()) {
        if (y_degree(p, mono) > 1) throw Error(ErrorCode::invalid_argument, "Q2 entries must be at most linear in y");
      }
      if (!e.is_zero()) p.commutative_ = false;
    }
  }
  p.q1_ = std::move(q1);
  p.q2_ = std::move(q2);
  p.cache_ = std::make_shared<detail::ProductCache>();
  return p;
}

std::string RingPresentation::var_name(std::size_t var) const {
  if (var < static_cast<std::size_t>(m_)) return "x" + std::to_string(static_cast<int>(var) + first_x_label_);
  return "y" + std::to_string(var - static_cast<std::size_t>(m_) + 1);
}

std::vector<std::string> RingPresentation::var_names() const {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < nvars(); ++v) out.push_back(var_name(v));
  return out;
}

RingPresentation weyl_presentation(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "Weyl algebra needs n >= 1");
  const auto nv = static_cast<std::size_t>(2 * n);
  RingPresentation::Table q1(n, std::vector<SkewPoly>(n, SkewPoly(nv)));
  for (int i = 0; i < n; ++i) q1[i][i] = SkewPoly::constant(nv, 1);
  return RingPresentation::create(n, n, std::move(q1), {});
}

RingPresentation sl2_presentation() {
  constexpr std::size_t nv = 3;
  RingPresentation::Table q2(3, std::vector<SkewPoly>(3, SkewPoly(nv)));
  auto y = [](std::size_t i) { return SkewPoly::variable(nv, i); };
  // 0-based: y1 -> 0, y2 -> 1, y3 -> 2
  q2[1][2] = y(2) * Rational(2);
  q2[2][1] = y(2) * Rational(-2);
  q2[1][0] = y(0) * Rational(-2);
  q2[0][1] = y(0) * Rational(2);
  q2[0][2] = y(1);
  q2[2][0] = -y(1);
  return RingPresentation::create(0, 3, {}, std::move(q2));
}

RingPresentation commutative_presentation(int m, int n) { return RingPresentation::create(m, n, {}, {}); }

SkewPoly multiply_monomials(const RingPresentation& p, const Monomial& m1, const Monomial& m2) {
  if (m1.size() != p.nvars() || m2.size() != p.nvars()) {
    throw Error(ErrorCode::dimension_mismatch, "monomial does not belong to this presentation");
  }
  if (p.is_commutative()) return SkewPoly::monomial(m1 * m2);
  const Monomial ys = y_part(p, m1);
  if (ys.is_one()) return SkewPoly::monomial(m1 * m2);
  auto& cache = p.cache();
  SkewPoly r(p.nvars());
  if (auto hit = cache.find_product(ys, m2)) {
    r = *std::move(hit);
  } else {
    r = SkewPoly::monomial(m2);
    for (int i = p.n() - 1; i >= 0; --i) {
      for (int e = 0; e < ys[p.y_var(i)]; ++e) r = times_generator_poly(p, static_cast<std::size_t>(i), r, 0);
    }
    cache.store_product(ys, m2, r);
  }
  return r.shifted(x_part(p, m1));
}

SkewPoly multiply(const RingPresentation& p, const SkewPoly& f, const SkewPoly& g) {
  if (f.nvars() != p.nvars() || g.nvars() != p.nvars()) {
    throw Error(ErrorCode::dimension_mismatch, "operands do not belong to this presentation");
  }
  SkewPoly r(p.nvars());
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) add_scaled(r, multiply_monomials(p, m1, m2), c1 * c2);
  }
  return r;
}

namespace {

struct Word {
  Rational coef;
  std::vector<std::size_t> letters;
};

// Generators in standard order are sorted ascending by flat index; an
// inversion is an adjacent pair (a, b) with a > b.
std::vector<std::size_t> letters_of(const RingPresentation& p, const Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    for (int e = 0; e < m[v]; ++e) out.push_back(v);
  }
  return out;
}

}  // namespace

SkewPoly normalize_word(const RingPresentation& p, std::span<const std::size_t> word, RewriteStrategy strategy,
                        std::uint64_t seed, std::size_t max_steps) {
  for (auto v : word) {
    if (v >= p.nvars()) throw Error(ErrorCode::dimension_mismatch, "word letter out of range");
  }
  std::mt19937_64 rng(seed);
  SkewPoly result(p.nvars());
  std::vector<Word> stack;
  stack.push_back({Rational(1), {word.begin(), word.end()}});
  std::size_t steps = 0;
  std::vector<std::size_t> inversions;
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    inversions.clear();
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
      if (w.letters[i] > w.letters[i + 1]) inversions.push_back(i);
    }
    if (inversions.empty()) {
      Monomial m(p.nvars());
      for (auto v : w.letters) m[v] += 1;
      result.add_term(m, w.coef);
      continue;
    }
    if (++steps > max_steps) throw Error(ErrorCode::budget, "word rewriting step budget exceeded");
    std::size_t pos = inversions.front();
    if (strategy == RewriteStrategy::rightmost) {
      pos = inversions.back();
    } else if (strategy == RewriteStrategy::random) {
      pos = inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng)];
    }
    const std::size_t hi = w.letters[pos];
    const std::size_t lo = w.letters[pos + 1];
    // hi lo -> lo hi + correction
    const SkewPoly* correction = nullptr;
    if (p.is_y(hi) && p.is_y(lo)) {
      correction = &p.q2(static_cast<int>(hi) - p.m(), static_cast<int>(lo) - p.m());
    } else if (p.is_y(hi)) {
      correction = &p.q1(static_cast<int>(hi) - p.m(), static_cast<int>(lo));
    }
    if (correction != nullptr) {
      for (const auto& [qm, qc] : correction->terms()) {
        Word c{w.coef * qc, {}};
        c.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(pos));
        const auto mid = letters_of(p, qm);
        c.letters.insert(c.letters.end(), mid.begin(), mid.end());
        c.letters.insert(c.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.letters.end());
        stack.push_back(std::move(c));
      }
    }
    std::swap(w.letters[pos], w.letters[pos + 1]);
    stack.push_back(std::move(w));
  }
  return result;
}

bool validate_presentation(const RingPresentation& p) {
  for (int i = 0; i < p.n(); ++i) {
    if (!p.q2(i, i).is_zero()) return false;
    for (int j = 0; j < p.n(); ++j) {
      if (p.q2(i, j) != -p.q2(j, i)) return false;
    }
  }
  const std::size_t nv = p.nvars();
  try {
    for (std::size_t a = 0; a < nv; ++a) {
      const SkewPoly ga = SkewPoly::variable(nv, a);
      for (std::size_t b = 0; b < nv; ++b) {
        const SkewPoly gb = SkewPoly::variable(nv, b);
        const SkewPoly ab = multiply(p, ga, gb);
        for (std::size_t c = 0; c < nv; ++c) {
          const SkewPoly gc = SkewPoly::variable(nv, c);
          const SkewPoly left = multiply(p, ab, gc);
          if (left != multiply(p, ga, multiply(p, gb, gc))) return false;
          const std::size_t word[] = {a, b, c};
          if (normalize_word(p, word, RewriteStrategy::leftmost, 0, 100'000) != left) return false;
          if (normalize_word(p, word, RewriteStrategy::rightmost, 0, 100'000) != left) return false;
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::budget) return false;
    throw;
  }
  return true;
}

}  // namespace weylfan
