#pragma once

#include <array>
#include <functional>
#include <string>

#include "kumfib/algebra/ratfn.hpp"

namespace kumfib {

class DegenerateModelError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct Invariants {
  RatFn b2, b4, b6, b8, c4, c6, disc;
};

// Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 over a field of rational functions in u
// (and possibly l1, l2).
class WeierstrassModel {
 public:
  WeierstrassModel() = default;
  WeierstrassModel(RatFn a1, RatFn a2, RatFn a3, RatFn a4, RatFn a6);
  // from lhs - rhs with lhs/rhs as above; F must be Y^2 + ... - X^3 - ... up to a constant factor
  static WeierstrassModel from_equation(const RatFn& lhs_minus_rhs);
  static WeierstrassModel short_form(RatFn A, RatFn B) { return WeierstrassModel(0, 0, 0, std::move(A), std::move(B)); }

  const RatFn& a1() const { return a_[0]; }
  const RatFn& a2() const { return a_[1]; }
  const RatFn& a3() const { return a_[2]; }
  const RatFn& a4() const { return a_[3]; }
  const RatFn& a6() const { return a_[4]; }
  const std::array<RatFn, 5>& coefficients() const { return a_; }

  Invariants invariants() const;
  RatFn discriminant() const { return invariants().disc; }
  // J = c4^3 / (1728 disc), so that J = 1 at j = 1728; throws on a singular model
  RatFn j_invariant() const;

  // (X, Y) = (w^2 X' + r, w^3 Y' + s w^2 X' + t)
  WeierstrassModel transform(const RatFn& r, const RatFn& s, const RatFn& t, const RatFn& w) const;
  // y^2 = x^3 - 27 c4 x - 54 c6
  WeierstrassModel short_model() const;
  WeierstrassModel specialize(const Bindings& b) const;
  WeierstrassModel substitute(Var v, const RatFn& value) const;

  RatFn equation() const;  // Y^2 + a1 XY + a3 Y - X^3 - a2 X^2 - a4 X - a6
  bool operator==(const WeierstrassModel& o) const { return a_ == o.a_; }
  std::string to_string() const;
  std::string to_latex() const;

 private:
  std::array<RatFn, 5> a_{};
};

struct Point {
  bool infinity = true;
  RatFn x, y;
  static Point zero() { return Point{}; }
  static Point affine(RatFn x, RatFn y) { return Point{false, std::move(x), std::move(y)}; }
  bool operator==(const Point& o) const { return infinity == o.infinity && (infinity || (x == o.x && y == o.y)); }
  std::string to_string() const;
};

bool on_curve(const WeierstrassModel& w, const Point& p);
Point negate(const WeierstrassModel& w, const Point& p);
Point add(const WeierstrassModel& w, const Point& p, const Point& q);
Point multiply(const WeierstrassModel& w, const Point& p, long n);
// smallest n <= bound with nP = O, or 0
int torsion_order(const WeierstrassModel& w, const Point& p, int bound = 12);

// Image of a point under the change of variables of transform(r, s, t, w).
Point transform_point(const Point& p, const RatFn& r, const RatFn& s, const RatFn& t, const RatFn& w);

}  // namespace kumfib
