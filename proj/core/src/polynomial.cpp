#include "weylfan/polynomial.hpp"

namespace weylfan {

CommPoly multiply(const CommPoly& f, const CommPoly& g) {
  if (f.nvars() != g.nvars()) throw Error(ErrorCode::dimension_mismatch, "polynomials live in different rings");
  CommPoly r(f.nvars());
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) r.add_term(m1 * m2, c1 * c2);
  }
  return r;
}

}  // namespace weylfan
