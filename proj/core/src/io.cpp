#include "weylfan/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "weylfan/order.hpp"

namespace weylfan {

namespace {

constexpr long kMaxExponent = 10'000;

template <class Poly>
std::string format_terms(const Poly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  const MonomialOrder order(f.nvars());
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&order](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [m, c] = terms[k];
    const Rational mag = abs(c);
    if (k == 0) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += monomial_to_string(m, names);
    } else {
      out += to_string(mag) + "*" + monomial_to_string(m, names);
    }
  }
  return out;
}

SkewPoly times(const RingPresentation& p, const SkewPoly& a, const SkewPoly& b) { return multiply(p, a, b); }
CommPoly times(const RingPresentation&, const CommPoly& a, const CommPoly& b) { return multiply(a, b); }

template <class Poly>
class ExpressionParser {
 public:
  ExpressionParser(const RingPresentation& p, std::string_view text, int line, int column)
      : p_(p), names_(p.var_names()), text_(text), line_(line), column_(column) {}

  Poly parse() {
    Poly r = expression();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_ + static_cast<int>(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Poly expression() {
    Poly r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  Poly term() {
    Poly r = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = times(p_, r, unary());
        continue;
      }
      if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
        fail("missing '*' (juxtaposition is not allowed)");
      }
      return r;
    }
  }

  Poly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    const Poly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 5 || std::stol(digits) > kMaxExponent) fail("exponent too large");
    Poly r = Poly::constant(p_.nvars(), 1);
    for (long k = std::stol(digits); k > 0; --k) r = times(p_, r, base);
    return r;
  }

  std::string_view integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal(integer_literal());
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string_view den = integer_literal();
        if (den.empty()) fail("expected a denominator");
        if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; })) fail("zero denominator");
        literal += '/';
        literal += den;
      }
      return Poly::constant(p_.nvars(), parse_rational(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(p_.nvars(), static_cast<std::size_t>(it - names_.begin()));
    }
    if (c == '(') {
      ++pos_;
      Poly r = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const RingPresentation& p_;
  std::vector<std::string> names_;
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (offset != nullptr) *offset += a;
  return s.substr(a, b - a);
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int positive_count(const std::string& word, int line, int column) {
  if (word.empty() || !std::all_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      word.size() > 2) {
    throw ParseError("expected a small nonnegative count, got '" + word + "'", line, column);
  }
  return std::stoi(word);
}

struct Line {
  int number;
  std::string key;
  std::string value;
  int value_column;
};

}  // namespace

std::string format_polynomial(const SkewPoly& f, const std::vector<std::string>& names) {
  return format_terms(f, names);
}

std::string format_polynomial(const CommPoly& f, const std::vector<std::string>& names) {
  return format_terms(f, names);
}

std::string format_ideal(const std::vector<CommPoly>& gens, const std::vector<std::string>& names) {
  if (gens.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k > 0) out += ", ";
    out += format_polynomial(gens[k], names);
  }
  return out + ">";
}

SkewPoly parse_polynomial(const RingPresentation& p, std::string_view text, int line, int column) {
  return ExpressionParser<SkewPoly>(p, text, line, column).parse();
}

CommPoly parse_commutative(const RingPresentation& p, std::string_view text, int line, int column) {
  return ExpressionParser<CommPoly>(p, text, line, column).parse();
}

WeightVector parse_weight(const RingPresentation& p, std::string_view text, int line, int column) {
  std::vector<Rational> flat;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view raw = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    std::size_t offset = start;
    const std::string_view entry = trim(raw, &offset);
    try {
      flat.push_back(parse_rational(entry));
    } catch (const Error&) {
      throw ParseError("malformed weight entry '" + std::string(entry) + "'", line, column + static_cast<int>(offset));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (flat.size() != p.nvars()) {
    throw ParseError("weight needs " + std::to_string(p.nvars()) + " entries, got " + std::to_string(flat.size()),
                     line, column);
  }
  return WeightVector::from_flat(p, flat);
}

ProblemFile parse_problem(std::string_view text, std::string name) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    start = end + 1;
    std::size_t lead = 0;
    const std::string_view body = trim(raw, &lead);
    if (body.empty() || body.front() == '#') continue;
    const std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'key: value'", number, static_cast<int>(lead) + 1);
    }
    std::size_t key_offset = 0;
    const std::string key(trim(raw.substr(0, colon), &key_offset));
    std::size_t value_offset = colon + 1;
    const std::string value(trim(raw.substr(colon + 1), &value_offset));
    lines.push_back({number, key, value, static_cast<int>(value_offset) + 1});
  }

  const Line* ring_line = nullptr;
  for (const auto& l : lines) {
    if (l.key == "ring") {
      if (ring_line != nullptr) throw ParseError("duplicate 'ring:' line", l.number, 1);
      ring_line = &l;
    } else if (l.key != "relation" && l.key != "ideal" && l.key != "weight" && l.key != "order") {
      throw ParseError("unknown key '" + l.key + "'", l.number, 1);
    }
  }
  if (ring_line == nullptr) throw ParseError("missing 'ring:' line", 1, 1);

  const auto parts = words(ring_line->value);
  const int rl = ring_line->number;
  const int rc = ring_line->value_column;
  if (parts.empty()) throw ParseError("empty ring description", rl, rc);
  const std::string kind = parts[0];
  std::optional<RingPresentation> ring;
  bool custom = false;
  int cm = 0;
  int cn = 0;
  if (kind == "weyl" && parts.size() == 2) {
    const int n = positive_count(parts[1], rl, rc);
    if (n < 1) throw ParseError("weyl needs n >= 1", rl, rc);
    ring = weyl_presentation(n);
  } else if (kind == "sl2" && parts.size() == 1) {
    ring = sl2_presentation();
  } else if (kind == "commutative" && (parts.size() == 2 || parts.size() == 3)) {
    const int m = positive_count(parts[1], rl, rc);
    const int n = parts.size() == 3 ? positive_count(parts[2], rl, rc) : 0;
    if (m + n < 1) throw ParseError("ring needs at least one variable", rl, rc);
    ring = commutative_presentation(m, n);
  } else if (kind == "custom" && parts.size() == 3) {
    custom = true;
    cm = positive_count(parts[1], rl, rc);
    cn = positive_count(parts[2], rl, rc);
    if (cm + cn < 1) throw ParseError("ring needs at least one variable", rl, rc);
  } else {
    throw ParseError("unknown ring '" + ring_line->value + "'", rl, rc);
  }
  if (ring && ring->nvars() > Monomial::kMaxVars) throw ParseError("too many variables", rl, rc);

  if (custom) {
    if (static_cast<std::size_t>(cm + cn) > Monomial::kMaxVars) throw ParseError("too many variables", rl, rc);
    const auto nv = static_cast<std::size_t>(cm + cn);
    const RingPresentation scratch = commutative_presentation(cm, cn);
    const auto names = scratch.var_names();
    RingPresentation::Table q1(cn, std::vector<SkewPoly>(cm, SkewPoly(nv)));
    RingPresentation::Table q2(cn, std::vector<SkewPoly>(cn, SkewPoly(nv)));
    for (const auto& l : lines) {
      if (l.key != "relation") continue;
      const std::string& v = l.value;
      const std::size_t open = v.find('[');
      const std::size_t comma = v.find(',');
      const std::size_t close = v.find(']');
      const std::size_t eq = v.find('=');
      if (open != 0 || comma == std::string::npos || close == std::string::npos || eq == std::string::npos ||
          !(comma < close && close < eq)) {
        throw ParseError("expected '[a,b] = expression'", l.number, l.value_column);
      }
      auto index_of = [&](std::string_view raw, std::size_t at) {
        std::size_t offset = at;
        const std::string id(trim(raw, &offset));
        const auto it = std::find(names.begin(), names.end(), id);
        if (it == names.end()) {
          throw ParseError("unknown generator '" + id + "'", l.number, l.value_column + static_cast<int>(offset));
        }
        return static_cast<std::size_t>(it - names.begin());
      };
      const std::size_t a = index_of(std::string_view(v).substr(open + 1, comma - open - 1), open + 1);
      const std::size_t b = index_of(std::string_view(v).substr(comma + 1, close - comma - 1), comma + 1);
      const SkewPoly rhs = as_skew(parse_commutative(scratch, std::string_view(v).substr(eq + 1), l.number,
                                                     l.value_column + static_cast<int>(eq) + 1));
      const bool ya = scratch.is_y(a);
      const bool yb = scratch.is_y(b);
      auto y_degree_ok = [&](int limit) {
        for (const auto& [mono, c] : rhs.terms()) {
          int d = 0;
          for (int i = 0; i < cn; ++i) d += mono[scratch.y_var(i)];
          if (d > limit) return false;
        }
        return true;
      };
      if (!ya && !yb) {
        if (!rhs.is_zero()) throw ParseError("x generators must commute", l.number, l.value_column);
      } else if (ya && yb) {
        if (a == b) throw ParseError("[y,y] is zero", l.number, l.value_column);
        if (!y_degree_ok(1)) throw ParseError("[y,y] must be at most linear in y", l.number, l.value_column);
        const int i = static_cast<int>(a) - cm;
        const int j = static_cast<int>(b) - cm;
        q2[i][j] = rhs;
        q2[j][i] = -rhs;
      } else {
        if (!y_degree_ok(0)) throw ParseError("[y,x] must be a polynomial in x", l.number, l.value_column);
        if (ya) {
          q1[a - cm][b] = rhs;
        } else {
          q1[b - cm][a] = -rhs;
        }
      }
    }
    ring = RingPresentation::create(cm, cn, std::move(q1), std::move(q2));
  } else {
    for (const auto& l : lines) {
      if (l.key == "relation") throw ParseError("relations are only allowed for custom rings", l.number, 1);
    }
  }

  ProblemFile out{kind, *ring, {}, {}, std::nullopt, std::move(name)};
  for (const auto& l : lines) {
    if (l.key == "ideal") {
      std::size_t begin = 0;
      while (begin <= l.value.size()) {
        const std::size_t semi = std::min(l.value.find(';', begin), l.value.size());
        std::size_t offset = begin;
        const std::string_view piece = trim(std::string_view(l.value).substr(begin, semi - begin), &offset);
        if (!piece.empty()) {
          out.ideal.push_back(parse_polynomial(out.ring, piece, l.number, l.value_column + static_cast<int>(offset)));
        }
        begin = semi + 1;
      }
    } else if (l.key == "weight") {
      out.weights.push_back(parse_weight(out.ring, l.value, l.number, l.value_column));
    } else if (l.key == "order") {
      try {
        parse_base_order(l.value);
      } catch (const Error&) {
        throw ParseError("unknown order '" + l.value + "'", l.number, l.value_column);
      }
      out.order = l.value;
    }
  }
  return out;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str(), path);
}

}  // namespace weylfan
