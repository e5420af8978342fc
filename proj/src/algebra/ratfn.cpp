#include "kumfib/algebra/ratfn.hpp"

#include "kumfib/algebra/gcd.hpp"

namespace kumfib {

RatFn::RatFn(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw PoleError("zero denominator");
  if (num.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  MultiPoly g = gcd(num, den);
  if (g.is_constant()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = num.divexact(g);
    den_ = den.divexact(g);
  }
  normalize_leading();
}

void RatFn::normalize_leading() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  const FieldElement& lc = den_.leading_coefficient();
  if (lc.is_one()) return;
  FieldElement inv = lc.inverse();
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

FieldElement RatFn::constant_value() const {
  if (!is_constant()) throw AlgebraError("rational function is not constant: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_constant()) {
      num_ += o.num_;
      if (num_.is_zero()) den_ = MultiPoly(1);
      return *this;
    }
    *this = RatFn(num_ + o.num_, den_);
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ + o.num_;
    if (num_.is_zero()) den_ = MultiPoly(1);
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): only g can cancel
  MultiPoly g = gcd(den_, o.den_);
  MultiPoly b1 = den_.divexact(g), d1 = o.den_.divexact(g);
  MultiPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = RatFn();
  MultiPoly d = b1 * o.den_;
  if (!g.is_constant()) {
    MultiPoly h = gcd(n, g);
    if (!h.is_constant()) {
      n = n.divexact(h);
      d = d.divexact(h);
    }
  }
  *this = RatFn(std::move(n), std::move(d), Raw{});
  normalize_leading();
  return *this;
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_, Raw{}); }

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero() || o.is_zero()) return *this = RatFn();
  // cross-cancel: gcd(a, d) and gcd(c, b)
  MultiPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    MultiPoly g = gcd(a, d);
    if (!g.is_constant()) {
      a = a.divexact(g);
      d = d.divexact(g);
    }
  }
  if (!b.is_constant()) {
    MultiPoly g = gcd(c, b);
    if (!g.is_constant()) {
      c = c.divexact(g);
      b = b.divexact(g);
    }
  }
  *this = RatFn(a * c, b * d, Raw{});
  normalize_leading();
  return *this;
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw PoleError("inverse of zero");
  RatFn r(den_, num_, Raw{});
  r.normalize_leading();
  return r;
}

RatFn& RatFn::operator/=(const RatFn& o) { return *this *= o.inverse(); }

RatFn RatFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFn r(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Raw{});
  r.normalize_leading();
  return r;
}

RatFn RatFn::derivative(Var v) const {
  return RatFn(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFn RatFn::specialize(const Bindings& b) const {
  MultiPoly d = den_.substitute(b);
  if (d.is_zero()) {
    std::string s;
    for (auto& [v, x] : b) s += std::string(s.empty() ? "" : ", ") + var_name(v) + "=" + x.to_string();
    throw PoleError("denominator " + den_.to_string() + " vanishes at " + s);
  }
  return RatFn(num_.substitute(b), d);
}

RatFn RatFn::substitute(Var v, const RatFn& value) const {
  if (!has_var(v)) return *this;
  if (value.is_polynomial()) {
    MultiPoly val = value.num().scaled(value.den().constant_value().inverse());
    return RatFn(num_.substitute(v, val), den_.substitute(v, val));
  }
  // p(N/D) * D^n = sum c_k N^k D^(n-k)
  unsigned n = std::max(num_.degree(v), den_.degree(v));
  std::vector<MultiPoly> np{MultiPoly(1)}, dp{MultiPoly(1)};
  for (unsigned k = 1; k <= n; ++k) {
    np.push_back(np.back() * value.num());
    dp.push_back(dp.back() * value.den());
  }
  auto hom = [&](const MultiPoly& p) {
    auto c = p.coefficients(v);
    MultiPoly acc;
    for (size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) acc += c[k] * np[k] * dp[n - k];
    return acc;
  };
  return RatFn(hom(num_), hom(den_));
}

std::string RatFn::to_string() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RatFn::to_latex() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_latex();
  return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

DivRem divrem(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (q.is_zero()) throw AlgebraError("division by zero polynomial");
  unsigned m = q.degree(v);
  auto D = q.coefficients(v);
  RatFn lc_inv = RatFn(D[m]).inverse();
  std::vector<RatFn> R;
  for (auto& c : p.coefficients(v)) R.push_back(RatFn(c));
  RatFn quot;
  RatFn vv = RatFn::var(v);
  for (size_t k = R.size(); k-- > m;) {
    if (R[k].is_zero()) continue;
    RatFn f = R[k] * lc_inv;
    quot += f * RatFn(MultiPoly::monomial(Monomial::of(v, static_cast<unsigned>(k - m))));
    for (size_t i = 0; i <= m; ++i) R[k - m + i] -= f * RatFn(D[i]);
  }
  RatFn rem;
  for (size_t k = 0; k < std::min<size_t>(m, R.size()); ++k)
    rem += R[k] * RatFn(MultiPoly::monomial(Monomial::of(v, static_cast<unsigned>(k))));
  return {quot, rem};
}

int order_at_infinity(const RatFn& f, Var v) {
  if (f.is_zero()) return kInfiniteOrder;
  return static_cast<int>(f.den().degree(v)) - static_cast<int>(f.num().degree(v));
}

}  // namespace kumfib
