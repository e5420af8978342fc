#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "kumfib/weierstrass/model.hpp"

namespace kumfib {

class NoRationalPointError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Birational map from y^2 = q(x) to a Weierstrass model.
struct QuarticMap {
  WeierstrassModel model;
  std::string method;  // "rational-root", "square-constant" or "square-leading"
  std::function<Point(const RatFn& x, const RatFn& y)> forward;
  std::function<std::pair<RatFn, RatFn>(const Point& p)> inverse;
};

// q has degree 3 or 4 in x and must be squarefree over the coefficient field.
// A root may be supplied; otherwise rational roots are searched when the coefficients
// are rational numbers, then square leading or constant coefficients are used.
QuarticMap quartic_to_weierstrass(const MultiPoly& q, Var x, std::optional<RatFn> root = std::nullopt);

// t^2 = r(x) rewritten as y^2 = q(x) with q squarefree in x and y = t * factor.
struct DoubleCover {
  MultiPoly quartic;
  RatFn factor;
};
DoubleCover double_cover(const RatFn& r, Var x);

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace kumfib
