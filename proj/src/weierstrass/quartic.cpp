#include "kumfib/weierstrass/quartic.hpp"

#include <algorithm>

#include "kumfib/algebra/gcd.hpp"

namespace kumfib {

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = coeffs;
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() < 2) return roots;
  size_t low = 0;
  while (sgn(c[low]) == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  if (c.size() < 2) return roots;
  Integer l = 1;
  for (auto& x : c) l = lcm(l, Integer(x.get_den()));
  std::vector<Integer> z;
  for (auto& x : c) z.push_back(Integer(x * l));
  auto divisors = [](Integer n) {
    n = abs(n);
    std::vector<Integer> d;
    for (Integer i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        d.push_back(i);
        if (i * i != n) d.push_back(n / i);
      }
    return d;
  };
  for (auto& p : divisors(z[0]))
    for (auto& q : divisors(z.back()))
      for (int s : {1, -1}) {
        Rational x(p * s, q);
        x.canonicalize();
        Rational v = 0;
        for (size_t i = z.size(); i-- > 0;) v = v * x + Rational(z[i]);
        if (sgn(v) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

std::optional<RatFn> square_root(const RatFn& c) {
  if (c.is_zero()) return std::nullopt;
  auto n = poly_sqrt(c.num());
  if (!n) {
    n = poly_sqrt(-c.num());
    if (!n) return std::nullopt;
    auto d = poly_sqrt(-c.den());
    if (!d) return std::nullopt;
    return RatFn(*n, *d);
  }
  auto d = poly_sqrt(c.den());
  if (!d) return std::nullopt;
  return RatFn(*n, *d);
}

QuarticMap from_root(const std::vector<RatFn>& q, const RatFn& r) {
  // q(x + r) = a x^4 + b x^3 + c x^2 + d x
  std::vector<RatFn> s(5);
  std::vector<RatFn> cur = q;
  cur.resize(5);
  for (int k = 0; k <= 4; ++k) {
    RatFn acc;
    for (int j = k; j <= 4; ++j) {
      long b = 1;
      for (int i = 0; i < k; ++i) b = b * (j - i) / (i + 1);
      acc += cur[j] * RatFn(b) * r.pow(j - k);
    }
    s[k] = acc;
  }
  if (!s[0].is_zero()) throw AlgebraError("supplied root is not a root of the quartic");
  RatFn a = s[4], b = s[3], c = s[2], d = s[1];
  if (d.is_zero()) throw AlgebraError("root is not simple");
  QuarticMap m;
  m.method = "rational-root";
  m.model = WeierstrassModel(0, c, 0, b * d, a * d * d);
  m.forward = [r, d](const RatFn& x, const RatFn& y) {
    if (x == r) return Point::zero();
    RatFn dx = x - r;
    return Point::affine(d / dx, d * y / (dx * dx));
  };
  m.inverse = [r, d](const Point& p) {
    if (p.infinity) throw AlgebraError("point at infinity maps to the root");
    return std::make_pair(r + d / p.x, d * p.y / (p.x * p.x));
  };
  return m;
}

// v^2 = a u^4 + b u^3 + c u^2 + d u + q^2
QuarticMap from_square_constant(const RatFn& a, const RatFn& b, const RatFn& c, const RatFn& d, const RatFn& q) {
  QuarticMap m;
  m.method = "square-constant";
  RatFn a1 = d / q;
  RatFn a2 = c - d * d / (RatFn(4) * q * q);
  RatFn a3 = RatFn(2) * q * b;
  RatFn a4 = RatFn(-4) * q * q * a;
  RatFn a6 = a2 * a4;
  m.model = WeierstrassModel(a1, a2, a3, a4, a6);
  m.forward = [a, b, c, d, q, a1, a2, a3](const RatFn& u, const RatFn& v) {
    if (u.is_zero()) {
      if (v == q) return Point::zero();
      return Point::affine(-a2, a1 * a2 - a3);
    }
    RatFn x = (RatFn(2) * q * (v + q) + d * u) / (u * u);
    RatFn y = (RatFn(4) * q * q * (v + q) + RatFn(2) * q * (d * u + c * u * u) - d * d * u * u / (RatFn(2) * q)) / (u * u * u);
    return Point::affine(x, y);
  };
  m.inverse = [c, d, q, a1, a3, a4](const Point& p) {
    if (p.infinity) return std::make_pair(RatFn(0), q);
    // X^3 + a2 X^2 + a4 X + a6 = (X + a2)(X^2 + a4)
    RatFn u = p.y.is_zero() ? RatFn(2) * q * (p.y + a1 * p.x + a3) / (p.x * p.x + a4)
                            : (RatFn(2) * q * (p.x + c) - d * d / (RatFn(2) * q)) / p.y;
    RatFn v = -q + u * (u * p.x - d) / (RatFn(2) * q);
    return std::make_pair(u, v);
  };
  return m;
}

}  // namespace

QuarticMap quartic_to_weierstrass(const MultiPoly& qp, Var x, std::optional<RatFn> root) {
  unsigned deg = qp.degree(x);
  if (deg < 3 || deg > 4) throw AlgebraError("quartic_to_weierstrass needs degree 3 or 4");
  MultiPoly g = gcd(qp, qp.derivative(x));
  if (g.degree(x) > 0) throw AlgebraError("quartic is not squarefree: repeated factor " + g.to_string());
  auto pc = qp.coefficients(x);
  std::vector<RatFn> q;
  for (auto& c : pc) q.push_back(RatFn(c));
  q.resize(5);
  if (root) return from_root(q, *root);
  bool rational_coeffs = qp.variables() == (1u << static_cast<int>(x));
  if (rational_coeffs) {
    std::vector<Rational> c;
    bool ok = true;
    for (auto& p : pc) {
      FieldElement v = p.is_zero() ? FieldElement(0) : p.constant_value();
      if (!v.is_rational()) {
        ok = false;
        break;
      }
      c.push_back(v.rational());
    }
    if (ok) {
      auto roots = rational_roots(c);
      if (!roots.empty()) return from_root(q, RatFn(FieldElement(roots[0])));
    }
  }
  if (auto s = square_root(q[0])) return from_square_constant(q[4], q[3], q[2], q[1], *s);
  if (deg == 4) {
    if (auto s = square_root(q[4])) {
      // reverse: x = 1/x', y = y'/x'^2
      QuarticMap inner = from_square_constant(q[0], q[1], q[2], q[3], *s);
      QuarticMap m;
      m.method = "square-leading";
      m.model = inner.model;
      auto fwd = inner.forward;
      auto inv = inner.inverse;
      m.forward = [fwd](const RatFn& xx, const RatFn& yy) {
        RatFn xi = xx.inverse();
        return fwd(xi, yy * xi * xi);
      };
      m.inverse = [inv](const Point& p) {
        auto [u, v] = inv(p);
        RatFn ui = u.inverse();
        return std::make_pair(ui, v * ui * ui);
      };
      return m;
    }
  }
  throw NoRationalPointError("no rational root or square end coefficient found for " + qp.to_string());
}

DoubleCover double_cover(const RatFn& r, Var x) {
  MultiPoly p = r.num() * r.den();
  auto sqf = squarefree_decomposition(p, x);
  MultiPoly s(1), core(1);
  for (auto& f : sqf) {
    if (f.multiplicity / 2) s *= f.factor.pow(f.multiplicity / 2);
    if (f.multiplicity % 2) core *= f.factor;
  }
  MultiPoly unit = p.divexact(s * s * core);
  DoubleCover d;
  d.quartic = unit * core;
  // y = t * den / s
  d.factor = RatFn(r.den(), s);
  return d;
}

}  // namespace kumfib
