#include "kumfib/kummer/kummer.hpp"

namespace kumfib {

MultiPoly KummerField::cubic(Var x, Var l) {
  MultiPoly X = MultiPoly::var(x), L = MultiPoly::var(l);
  return X * (X - MultiPoly(1)) * (X - L);
}

MultiPoly KummerField::relation() {
  return cubic(Var::X1, Var::L1) * MultiPoly::var(Var::T).pow(2) - cubic(Var::X2, Var::L2);
}

KummerField::KummerField(const Bindings& lambda) : lambda_(lambda) {
  g_ = RatFn(cubic(Var::X2, Var::L2).substitute(lambda), cubic(Var::X1, Var::L1).substitute(lambda));
}

KummerElement::KummerElement(std::shared_ptr<const KummerField> f, RatFn a, RatFn b)
    : field_(std::move(f)), a_(std::move(a)), b_(std::move(b)) {
  if (a_.has_var(Var::T) || b_.has_var(Var::T)) throw AlgebraError("Kummer components must be free of t");
}

KummerElement KummerElement::operator+(const KummerElement& o) const {
  return KummerElement(field_, a_ + o.a_, b_ + o.b_);
}

KummerElement KummerElement::operator-(const KummerElement& o) const {
  return KummerElement(field_, a_ - o.a_, b_ - o.b_);
}

KummerElement KummerElement::operator-() const { return KummerElement(field_, -a_, -b_); }

KummerElement KummerElement::operator*(const KummerElement& o) const {
  if (b_.is_zero()) return KummerElement(field_, a_ * o.a_, a_ * o.b_);
  if (o.b_.is_zero()) return KummerElement(field_, a_ * o.a_, b_ * o.a_);
  return KummerElement(field_, a_ * o.a_ + b_ * o.b_ * field_->g(), a_ * o.b_ + b_ * o.a_);
}

KummerElement KummerElement::conjugate() const { return KummerElement(field_, a_, -b_); }

RatFn KummerElement::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - b_ * b_ * field_->g();
}

KummerElement KummerElement::inverse() const {
  if (is_zero()) throw PoleError("inverse of zero in the Kummer field");
  if (b_.is_zero()) return KummerElement(field_, a_.inverse());
  if (a_.is_zero()) {
    // (b t)^-1 = t / (b g)
    return KummerElement(field_, RatFn(), (b_ * field_->g()).inverse());
  }
  RatFn n = norm().inverse();
  return KummerElement(field_, a_ * n, -b_ * n);
}

KummerElement KummerElement::operator/(const KummerElement& o) const {
  if (o.b_.is_zero()) {
    RatFn inv = o.a_.inverse();
    return KummerElement(field_, a_ * inv, b_ * inv);
  }
  return *this * o.inverse();
}

KummerElement KummerElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  KummerElement r(field_, RatFn(1)), base = *this;
  if (b_.is_zero()) return KummerElement(field_, a_.pow(e));
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

KummerElement KummerElement::from_expr(const Expr& e, std::shared_ptr<const KummerField> f) {
  const Bindings& lam = f->lambda();
  // subexpressions free of t are evaluated directly as rational functions
  if (!((e.variables() >> static_cast<int>(Var::T)) & 1)) {
    RatFn r = to_ratfn(e);
    if (!lam.empty()) r = r.specialize(lam);
    return KummerElement(f, r);
  }
  switch (e.kind()) {
    case Expr::Kind::Variable:
      return KummerElement(f, RatFn(), RatFn(1));
    case Expr::Kind::Add:
      return from_expr(e.lhs(), f) + from_expr(e.rhs(), f);
    case Expr::Kind::Sub:
      return from_expr(e.lhs(), f) - from_expr(e.rhs(), f);
    case Expr::Kind::Mul:
      return from_expr(e.lhs(), f) * from_expr(e.rhs(), f);
    case Expr::Kind::Div:
      return from_expr(e.lhs(), f) / from_expr(e.rhs(), f);
    case Expr::Kind::Neg:
      return -from_expr(e.lhs(), f);
    case Expr::Kind::Pow:
      return from_expr(e.lhs(), f).pow(e.exponent());
    default:
      throw AlgebraError("unexpected expression node");
  }
}

std::string KummerElement::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*t";
}

KummerElement evaluate_poly(const MultiPoly& p, const std::map<Var, KummerElement>& at,
                            std::shared_ptr<const KummerField> f) {
  // nested Horner, innermost coefficients in Q(l1, l2)
  std::vector<Var> order;
  for (auto& [v, _] : at) order.push_back(v);
  std::function<KummerElement(const MultiPoly&, size_t)> rec = [&](const MultiPoly& q, size_t i) {
    if (q.is_zero()) return KummerElement(f);
    if (i == order.size()) {
      RatFn r(q);
      if (!f->lambda().empty()) r = r.specialize(f->lambda());
      return KummerElement(f, r);
    }
    Var v = order[i];
    if (!q.has_var(v)) return rec(q, i + 1);
    const KummerElement& x = at.at(v);
    auto cs = q.coefficients(v);
    KummerElement acc = rec(cs.back(), i + 1);
    for (size_t k = cs.size() - 1; k-- > 0;) acc = acc * x + rec(cs[k], i + 1);
    return acc;
  };
  return rec(p, 0);
}

}  // namespace kumfib
