#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylfan/filtration.hpp"
#include "weylfan/monomial_ideal.hpp"
#include "weylfan/polynomial.hpp"
#include "weylfan/ring.hpp"

namespace weylfan {

/// Infix rendering, terms in descending grevlex order, e.g. "x1*y1^2 - 2*y2 + 1/3".
/// Parsing the output over the same ring gives the polynomial back.
std::string format_polynomial(const SkewPoly& f, const std::vector<std::string>& names);
std::string format_polynomial(const CommPoly& f, const std::vector<std::string>& names);

/// "<g1, g2, ...>"; the empty list prints as "<0>".
std::string format_ideal(const std::vector<CommPoly>& gens, const std::vector<std::string>& names);

/// Parses an infix expression over the generators of p: integers, p/q
/// literals, + - * ^ and parentheses. Juxtaposition is rejected. Products
/// are taken in R. Errors are ParseError with positions relative to
/// (line, column) of the first character.
SkewPoly parse_polynomial(const RingPresentation& p, std::string_view text, int line = 1, int column = 1);

/// Same expression language, commutative products.
CommPoly parse_commutative(const RingPresentation& p, std::string_view text, int line = 1, int column = 1);

/// Comma separated rationals, u entries first.
WeightVector parse_weight(const RingPresentation& p, std::string_view text, int line = 1, int column = 1);

/// A problem description:
///
///   ring: weyl 2 | commutative m n | sl2 | custom m n
///   relation: [y1,x1] = 1          (custom rings)
///   ideal: y1^2 - y2; x1*y1 + 2*x2*y2
///   weight: 1,1,1,3                (repeatable)
///   order: grevlex
///
/// Blank lines and lines starting with '#' are ignored.
struct ProblemFile {
  std::string ring_kind;
  RingPresentation ring;
  std::vector<SkewPoly> ideal;
  std::vector<WeightVector> weights;
  std::optional<std::string> order;
  std::string name;
};

ProblemFile parse_problem(std::string_view text, std::string name = "<input>");
ProblemFile load_problem(const std::string& path);

}  // namespace weylfan
