#pragma once

#include <optional>
#include <vector>

#include "kumfib/algebra/multipoly.hpp"

namespace kumfib {

// order of the zero polynomial
inline constexpr int kInfiniteOrder = 1 << 30;

// Greatest common divisor in K[vars], normalized to leading coefficient 1.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as a polynomial in v
MultiPoly content(const MultiPoly& p, Var v);
MultiPoly primitive_part(const MultiPoly& p, Var v);

// Dense univariate helpers over the coefficient field (p must involve only v).
std::vector<FieldElement> to_dense(const MultiPoly& p, Var v);
MultiPoly from_dense(const std::vector<FieldElement>& c, Var v);
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, Var v);

// pseudo-remainder of a by b in v
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v);

struct SquarefreeFactor {
  MultiPoly factor;
  unsigned multiplicity;
};

// Yun's algorithm in v over the fraction field of the remaining variables.
// Factors are primitive in v with leading coefficient 1; units are dropped.
std::vector<SquarefreeFactor> squarefree_decomposition(const MultiPoly& p, Var v);

// Pairwise coprime squarefree polynomials (in v) whose product has the same roots as the inputs.
std::vector<MultiPoly> coprime_base(const std::vector<MultiPoly>& polys, Var v);

// Splits a squarefree f into parts on whose roots p vanishes to a constant order.
// Returns (part, order) pairs; order is kInfiniteOrder when p == 0.
struct OrderPiece {
  MultiPoly part;
  int order;
};
std::vector<OrderPiece> split_by_order(const MultiPoly& f, const MultiPoly& p, Var v);

// Order of vanishing of p along the squarefree primitive f (f must have uniform order).
int order_at(const MultiPoly& f, const MultiPoly& p, Var v);

}  // namespace kumfib

namespace kumfib {

// Exact square root of a polynomial with a rational-square leading coefficient, if any.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

}  // namespace kumfib
