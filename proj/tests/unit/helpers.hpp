#pragma once

#include <random>
#include <string>

#include "kumfib/algebra/expr.hpp"

namespace kumfib::test {

inline RatFn R(const std::string& s, const NumberField* f = nullptr) { return to_ratfn(parse_expr(s, f)); }
inline MultiPoly P(const std::string& s, const NumberField* f = nullptr) { return to_poly(parse_expr(s, f)); }

// random polynomial in the given variables with small integer coefficients
inline MultiPoly random_poly(std::mt19937& rng, std::initializer_list<Var> vars, int max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (Var v : vars) m = m * Monomial::of(v, static_cast<unsigned>(deg(rng)));
    p += MultiPoly::monomial(m, FieldElement(coef(rng)));
  }
  return p;
}

}  // namespace kumfib::test
