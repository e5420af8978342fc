#include "kumfib/weierstrass/model.hpp"

namespace kumfib {

WeierstrassModel::WeierstrassModel(RatFn a1, RatFn a2, RatFn a3, RatFn a4, RatFn a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
  for (auto& c : a_)
    if (c.has_var(Var::X) || c.has_var(Var::Y)) throw AlgebraError("Weierstrass coefficient involves X or Y");
}

WeierstrassModel WeierstrassModel::from_equation(const RatFn& f) {
  const MultiPoly& n = f.num();
  if (f.den().has_var(Var::X) || f.den().has_var(Var::Y)) throw AlgebraError("equation denominator involves X or Y");
  if (n.degree(Var::Y) != 2 || n.degree(Var::X) != 3) throw AlgebraError("not a Weierstrass equation: " + f.to_string());
  auto coef = [&](unsigned ey, unsigned ex) { return RatFn(n.coefficient(Var::Y, ey).coefficient(Var::X, ex), f.den()); };
  RatFn y2 = coef(2, 0);
  if (!y2.is_constant()) throw AlgebraError("Y^2 coefficient must be constant");
  RatFn x3 = -coef(0, 3);
  if (x3 != y2) throw AlgebraError("X^3 and Y^2 coefficients must match: " + f.to_string());
  RatFn inv = y2.inverse();
  if (!n.coefficient(Var::Y, 2).coefficient(Var::X, 1).is_zero() || n.degree(Var::Y) > 2 ||
      !n.coefficient(Var::Y, 1).coefficient(Var::X, 2).is_zero())
    throw AlgebraError("not a Weierstrass equation: " + f.to_string());
  return WeierstrassModel(coef(1, 1) * inv, -coef(0, 2) * inv, coef(1, 0) * inv, -coef(0, 1) * inv, -coef(0, 0) * inv);
}

Invariants WeierstrassModel::invariants() const {
  const RatFn &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
  Invariants v;
  v.b2 = a1 * a1 + RatFn(4) * a2;
  v.b4 = RatFn(2) * a4 + a1 * a3;
  v.b6 = a3 * a3 + RatFn(4) * a6;
  v.b8 = a1 * a1 * a6 + RatFn(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - RatFn(24) * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + RatFn(36) * v.b2 * v.b4 - RatFn(216) * v.b6;
  v.disc = -v.b2 * v.b2 * v.b8 - RatFn(8) * v.b4 * v.b4 * v.b4 - RatFn(27) * v.b6 * v.b6 + RatFn(9) * v.b2 * v.b4 * v.b6;
  return v;
}

RatFn WeierstrassModel::j_invariant() const {
  Invariants v = invariants();
  if (v.disc.is_zero()) throw DegenerateModelError("singular Weierstrass model (zero discriminant)");
  return v.c4.pow(3) / (RatFn(1728) * v.disc);
}

WeierstrassModel WeierstrassModel::transform(const RatFn& r, const RatFn& s, const RatFn& t, const RatFn& w) const {
  if (w.is_zero()) throw AlgebraError("transform with w = 0");
  const RatFn &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
  RatFn n1 = a1 + RatFn(2) * s;
  RatFn n2 = a2 - s * a1 + RatFn(3) * r - s * s;
  RatFn n3 = a3 + r * a1 + RatFn(2) * t;
  RatFn n4 = a4 - s * a3 + RatFn(2) * r * a2 - (t + r * s) * a1 + RatFn(3) * r * r - RatFn(2) * s * t;
  RatFn n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
  RatFn wi = w.inverse();
  return WeierstrassModel(n1 * wi, n2 * wi.pow(2), n3 * wi.pow(3), n4 * wi.pow(4), n6 * wi.pow(6));
}

WeierstrassModel WeierstrassModel::short_model() const {
  Invariants v = invariants();
  return short_form(RatFn(-27) * v.c4, RatFn(-54) * v.c6);
}

WeierstrassModel WeierstrassModel::specialize(const Bindings& b) const {
  return WeierstrassModel(a_[0].specialize(b), a_[1].specialize(b), a_[2].specialize(b), a_[3].specialize(b),
                          a_[4].specialize(b));
}

WeierstrassModel WeierstrassModel::substitute(Var v, const RatFn& value) const {
  return WeierstrassModel(a_[0].substitute(v, value), a_[1].substitute(v, value), a_[2].substitute(v, value),
                          a_[3].substitute(v, value), a_[4].substitute(v, value));
}

RatFn WeierstrassModel::equation() const {
  RatFn X = RatFn::var(Var::X), Y = RatFn::var(Var::Y);
  return Y * Y + a_[0] * X * Y + a_[2] * Y - X * X * X - a_[1] * X * X - a_[3] * X - a_[4];
}

namespace {

std::string render(const WeierstrassModel& w, bool latex) {
  auto str = [&](const RatFn& r) { return latex ? r.to_latex() : r.to_string(); };
  auto wrap = [&](const RatFn& r) {
    std::string s = str(r);
    if (r.is_constant() && !r.constant_value().is_compound()) return s;
    if (r.num().size() == 1 && r.is_polynomial()) return s;
    return latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
  };
  std::string X = "X", Y = "Y";
  std::string mul = latex ? " " : "*";
  std::string lhs = latex ? "Y^{2}" : "Y^2";
  if (!w.a1().is_zero()) lhs += " + " + (w.a1().is_constant() && w.a1().constant_value().is_one() ? "" : wrap(w.a1()) + mul) + X + mul + Y;
  if (!w.a3().is_zero()) lhs += " + " + wrap(w.a3()) + mul + Y;
  std::string rhs = latex ? "X^{3}" : "X^3";
  auto term = [&](const RatFn& c, const std::string& mono) {
    if (c.is_zero()) return;
    if (c.is_constant() && c.constant_value().is_one()) rhs += " + " + mono;
    else if (mono.empty()) rhs += " + " + wrap(c);
    else rhs += " + " + wrap(c) + mul + mono;
  };
  term(w.a2(), latex ? "X^{2}" : "X^2");
  term(w.a4(), X);
  term(w.a6(), "");
  return lhs + " = " + rhs;
}

}  // namespace

std::string WeierstrassModel::to_string() const { return render(*this, false); }
std::string WeierstrassModel::to_latex() const { return render(*this, true); }

std::string Point::to_string() const {
  if (infinity) return "O";
  return "(" + x.to_string() + ", " + y.to_string() + ")";
}

bool on_curve(const WeierstrassModel& w, const Point& p) {
  if (p.infinity) return true;
  const RatFn &x = p.x, &y = p.y;
  RatFn lhs = y * y + w.a1() * x * y + w.a3() * y;
  RatFn rhs = x * x * x + w.a2() * x * x + w.a4() * x + w.a6();
  return lhs == rhs;
}

Point negate(const WeierstrassModel& w, const Point& p) {
  if (p.infinity) return p;
  return Point::affine(p.x, -p.y - w.a1() * p.x - w.a3());
}

Point add(const WeierstrassModel& w, const Point& p, const Point& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  RatFn lambda, nu;
  if (p.x == q.x) {
    RatFn sum = p.y + q.y + w.a1() * q.x + w.a3();
    if (sum.is_zero()) return Point::zero();
    RatFn num = RatFn(3) * p.x * p.x + RatFn(2) * w.a2() * p.x + w.a4() - w.a1() * p.y;
    RatFn den = RatFn(2) * p.y + w.a1() * p.x + w.a3();
    lambda = num / den;
    nu = (-p.x * p.x * p.x + w.a4() * p.x + RatFn(2) * w.a6() - w.a3() * p.y) / den;
  } else {
    RatFn dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  }
  RatFn x3 = lambda * lambda + w.a1() * lambda - w.a2() - p.x - q.x;
  RatFn y3 = -(lambda + w.a1()) * x3 - nu - w.a3();
  return Point::affine(x3, y3);
}

Point multiply(const WeierstrassModel& w, const Point& p, long n) {
  if (n < 0) return multiply(w, negate(w, p), -n);
  Point r = Point::zero(), b = p;
  while (n > 0) {
    if (n & 1) r = add(w, r, b);
    n >>= 1;
    if (n) b = add(w, b, b);
  }
  return r;
}

int torsion_order(const WeierstrassModel& w, const Point& p, int bound) {
  Point q = p;
  for (int n = 1; n <= bound; ++n) {
    if (q.infinity) return n;
    q = add(w, q, p);
  }
  return 0;
}

Point transform_point(const Point& p, const RatFn& r, const RatFn& s, const RatFn& t, const RatFn& w) {
  if (p.infinity) return p;
  RatFn w2 = w * w;
  RatFn x = (p.x - r) / w2;
  RatFn y = (p.y - s * (p.x - r) - t) / (w2 * w);
  return Point::affine(x, y);
}

}  // namespace kumfib
