#pragma once

#include <memory>
#include <string>

#include "kumfib/algebra/expr.hpp"

namespace kumfib {

// k(x1, x2)(t) with t^2 = g, where g = x2(x2-1)(x2-l2) / (x1(x1-1)(x1-l1)).
// The Kummer relation is x1(x1-1)(x1-l1) t^2 = x2(x2-1)(x2-l2), i.e. t = y2/y1.
class KummerField {
 public:
  // l1, l2 symbolic unless bound
  explicit KummerField(const Bindings& lambda = {});
  const RatFn& g() const { return g_; }
  const Bindings& lambda() const { return lambda_; }
  static MultiPoly relation();  // c(x1) t^2 - h(x2)
  static MultiPoly cubic(Var x, Var l);

 private:
  Bindings lambda_;
  RatFn g_;
};

class KummerElement {
 public:
  KummerElement(std::shared_ptr<const KummerField> f, RatFn a = RatFn(), RatFn b = RatFn());

  const RatFn& a() const { return a_; }
  const RatFn& b() const { return b_; }
  const KummerField& field() const { return *field_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_base() const { return b_.is_zero(); }

  KummerElement operator+(const KummerElement& o) const;
  KummerElement operator-(const KummerElement& o) const;
  KummerElement operator*(const KummerElement& o) const;
  KummerElement operator/(const KummerElement& o) const;
  KummerElement operator-() const;
  KummerElement conjugate() const;
  KummerElement inverse() const;
  KummerElement pow(int e) const;
  RatFn norm() const;  // a^2 - b^2 g
  friend bool operator==(const KummerElement& x, const KummerElement& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  // variables x1, x2, l1, l2 map to themselves and t to the square root
  static KummerElement from_expr(const Expr& e, std::shared_ptr<const KummerField> f);
  KummerElement constant(const RatFn& r) const { return KummerElement(field_, r); }

  std::string to_string() const;

 private:
  std::shared_ptr<const KummerField> field_;
  RatFn a_, b_;
};

// Evaluates a polynomial in (X, Y, u) with coefficients in Q(l1, l2) at Kummer elements.
KummerElement evaluate_poly(const MultiPoly& p, const std::map<Var, KummerElement>& at,
                            std::shared_ptr<const KummerField> f);

}  // namespace kumfib
