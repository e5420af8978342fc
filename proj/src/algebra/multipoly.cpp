#include "kumfib/algebra/multipoly.hpp"

#include <algorithm>
#include <queue>

namespace kumfib {

namespace {

const char* const kNames[kNumVars] = {"l1", "l2", "u", "x1", "x2", "t", "s", "X", "Y"};
const char* const kLatex[kNumVars] = {"\\lambda_1", "\\lambda_2", "u", "x_1", "x_2", "t", "s", "X", "Y"};

constexpr Monomial::Bits field_mask = (Monomial::Bits(1) << Monomial::kBits) - 1;

}  // namespace

const char* var_name(Var v) { return kNames[static_cast<int>(v)]; }
const char* var_latex(Var v) { return kLatex[static_cast<int>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kNames[i]) return static_cast<Var>(i);
  if (name == "lambda1" || name == "λ1") return Var::L1;
  if (name == "lambda2" || name == "λ2") return Var::L2;
  return std::nullopt;
}

Monomial::Bits Monomial::guard() {
  static const Bits g = [] {
    Bits b = 0;
    for (int i = 0; i < kNumVars; ++i) b |= Bits(1) << (kBits * i + kBits - 1);
    return b;
  }();
  return g;
}

Monomial Monomial::of(Var v, unsigned e) { return Monomial().with(v, e); }

Monomial Monomial::with(Var v, unsigned e) const {
  if (e > kMaxExponent) throw AlgebraError("exponent overflow");
  int sh = kBits * static_cast<int>(v);
  Bits b = bits_ & ~(field_mask << sh);
  return Monomial(b | (Bits(e) << sh));
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (int i = 0; i < kNumVars; ++i) d += exponent(static_cast<Var>(i));
  return d;
}

std::uint16_t Monomial::support() const {
  std::uint16_t s = 0;
  for (int i = 0; i < kNumVars; ++i)
    if (exponent(static_cast<Var>(i))) s |= 1u << i;
  return s;
}

bool Monomial::divides(const Monomial& o) const {
  Bits g = guard();
  return (((o.bits_ | g) - bits_) & g) == g;
}

std::optional<Var> Monomial::top_var() const {
  for (int i = kNumVars; i-- > 0;)
    if (exponent(static_cast<Var>(i))) return static_cast<Var>(i);
  return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Bits r = bits_ + o.bits_;
  if (r & guard()) throw AlgebraError("exponent overflow");
  return Monomial(r);
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw AlgebraError("monomial does not divide");
  return Monomial(bits_ - o.bits_);
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    r = r.with(v, std::min(a.exponent(v), b.exponent(v)));
  }
  return r;
}

MultiPoly::MultiPoly(const FieldElement& c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::var(Var v) { return monomial(Monomial::of(v)); }

MultiPoly MultiPoly::monomial(const Monomial& m, const FieldElement& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms_sorted(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) p.terms_.back().c += t.c;
    else {
      if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
  return p;
}

FieldElement MultiPoly::constant_value() const {
  if (!is_constant()) throw AlgebraError("polynomial is not constant: " + to_string());
  return terms_.empty() ? FieldElement(0) : terms_[0].c;
}

FieldElement MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return FieldElement(0);
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (auto& t : terms_) d = std::max(d, t.m.exponent(v));
  return d;
}

unsigned MultiPoly::low_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (auto& t : terms_) d = std::min(d, t.m.exponent(v));
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (auto& t : terms_) d = std::max(d, t.m.total_degree());
  return d;
}

std::uint16_t MultiPoly::variables() const {
  std::uint16_t s = 0;
  for (auto& t : terms_) s |= t.m.support();
  return s;
}

const NumberField* MultiPoly::field() const {
  const NumberField* f = nullptr;
  for (auto& t : terms_) f = join_fields(f, t.c.field());
  return f;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].m > b[j].m)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].m > a[i].m) {
      r.push_back(subtract ? Term{b[j].m, -b[j].c} : b[j]);
      ++j;
    } else {
      FieldElement c = a[i].c;
      if (subtract) c -= b[j].c;
      else c += b[j].c;
      if (!c.is_zero()) r.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.terms_ = merge(a.terms_, b.terms_, false);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.terms_ = merge(a.terms_, b.terms_, true);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

// clears denominators and accumulates with mpz
MultiPoly multiply_integer(const std::vector<Term>& p, const std::vector<Term>& q) {
  auto scale = [](const std::vector<Term>& t, std::vector<Integer>& out) {
    Integer l = 1;
    for (auto& x : t) {
      const Integer& d = x.c.rational().get_den();
      if (d != 1) l = lcm(l, d);
    }
    out.reserve(t.size());
    for (auto& x : t) {
      const Rational& c = x.c.rational();
      if (l == 1) out.push_back(c.get_num());
      else out.push_back(Integer(c.get_num() * (l / c.get_den())));
    }
    return l;
  };
  std::vector<Integer> pc, qc;
  Integer lp = scale(p, pc), lq = scale(q, qc);
  Integer l = lp * lq;
  struct Entry {
    Monomial m;
    uint32_t i, j;
  };
  auto less = [](const Entry& x, const Entry& y) { return x.m < y.m; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);
  heap.push({p[0].m * q[0].m, 0, 0});
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  Integer acc;
  Monomial cur;
  bool open = false;
  auto flush = [&] {
    if (open && sgn(acc) != 0) {
      Rational c(acc, l);
      if (l != 1) c.canonicalize();
      out.push_back({cur, FieldElement(c)});
    }
  };
  while (!heap.empty()) {
    Entry e = heap.top();
    heap.pop();
    if (!open || e.m != cur) {
      flush();
      acc = 0;
      cur = e.m;
      open = true;
    }
    mpz_addmul(acc.get_mpz_t(), pc[e.i].get_mpz_t(), qc[e.j].get_mpz_t());
    if (e.j == 0 && e.i + 1 < p.size()) heap.push({p[e.i + 1].m * q[0].m, e.i + 1, 0});
    if (e.j + 1 < q.size()) heap.push({p[e.i].m * q[e.j + 1].m, e.i, e.j + 1});
  }
  flush();
  return MultiPoly::from_terms_sorted(std::move(out));
}

}  // namespace

// Johnson's heap multiplication: terms come out in decreasing order.
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() == 1) return b.shifted(a.terms_[0].m).scaled(a.terms_[0].c);
  if (b.size() == 1) return a.shifted(b.terms_[0].m).scaled(b.terms_[0].c);
  const auto& p = a.size() <= b.size() ? a.terms_ : b.terms_;
  const auto& q = a.size() <= b.size() ? b.terms_ : a.terms_;
  auto rational = [](const std::vector<Term>& t) {
    for (auto& x : t)
      if (!x.c.is_rational()) return false;
    return true;
  };
  if (rational(p) && rational(q)) return multiply_integer(p, q);
  struct Entry {
    Monomial m;
    uint32_t i, j;
  };
  auto less = [](const Entry& x, const Entry& y) { return x.m < y.m; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);
  heap.push({p[0].m * q[0].m, 0, 0});
  std::vector<Term>& out = r.terms_;
  out.reserve(p.size() + q.size());
  FieldElement acc;
  Monomial cur;
  bool open = false;
  while (!heap.empty()) {
    Entry e = heap.top();
    heap.pop();
    if (!open || e.m != cur) {
      if (open && !acc.is_zero()) out.push_back({cur, std::move(acc)});
      acc = FieldElement(0);
      cur = e.m;
      open = true;
    }
    acc.add_product(p[e.i].c, q[e.j].c);
    if (e.j == 0 && e.i + 1 < p.size()) heap.push({p[e.i + 1].m * q[0].m, e.i + 1, 0});
    if (e.j + 1 < q.size()) heap.push({p[e.i].m * q[e.j + 1].m, e.i, e.j + 1});
  }
  if (open && !acc.is_zero()) out.push_back({cur, std::move(acc)});
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
  if (c.is_zero()) return MultiPoly();
  if (c.is_one()) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

MultiPoly MultiPoly::shifted(const Monomial& m) const {
  MultiPoly r = *this;
  if (m.is_one()) return r;
  for (auto& t : r.terms_) t.m = t.m * m;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

MultiPoly MultiPoly::derivative(Var v) const {
  std::vector<Term> r;
  for (auto& t : terms_) {
    unsigned e = t.m.exponent(v);
    if (e == 0) continue;
    r.push_back({t.m.with(v, e - 1), t.c * FieldElement(static_cast<long>(e))});
  }
  // lowering one exponent keeps the order
  MultiPoly p;
  p.terms_ = std::move(r);
  return p;
}

std::vector<MultiPoly> MultiPoly::coefficients(Var v) const {
  std::vector<MultiPoly> c(degree(v) + 1);
  for (auto& t : terms_) {
    unsigned e = t.m.exponent(v);
    c[e].terms_.push_back({t.m.with(v, 0), t.c});
  }
  return c;
}

MultiPoly MultiPoly::from_coefficients(Var v, const std::vector<MultiPoly>& c) {
  std::vector<Term> all;
  for (size_t k = 0; k < c.size(); ++k)
    for (auto& t : c[k].terms_) {
      if (t.m.exponent(v) != 0) throw AlgebraError("coefficient involves the main variable");
      all.push_back({t.m.with(v, static_cast<unsigned>(k)), t.c});
    }
  return from_terms(std::move(all));
}

MultiPoly MultiPoly::coefficient(Var v, unsigned k) const {
  MultiPoly r;
  for (auto& t : terms_)
    if (t.m.exponent(v) == k) r.terms_.push_back({t.m.with(v, 0), t.c});
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const FieldElement& value) const {
  if (!has_var(v)) return *this;
  std::vector<Term> r;
  r.reserve(terms_.size());
  std::vector<FieldElement> powers{FieldElement(1)};
  for (auto& t : terms_) {
    unsigned e = t.m.exponent(v);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    FieldElement c = t.c * powers[e];
    if (!c.is_zero()) r.push_back({t.m.with(v, 0), std::move(c)});
  }
  return from_terms(std::move(r));
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  if (!has_var(v)) return *this;
  if (value.is_constant()) return substitute(v, value.constant_value());
  auto c = coefficients(v);
  MultiPoly r = c.back();
  for (size_t k = c.size() - 1; k-- > 0;) r = r * value + c[k];
  return r;
}

MultiPoly MultiPoly::substitute(const Bindings& b) const {
  MultiPoly r = *this;
  for (auto& [v, val] : b) r = r.substitute(v, val);
  return r;
}

MultiPoly MultiPoly::rename(Var from, Var to) const {
  if (from == to || !has_var(from)) return *this;
  if (has_var(to)) throw AlgebraError("rename target already present");
  std::vector<Term> r;
  for (auto& t : terms_) r.push_back({t.m.with(from, 0).with(to, t.m.exponent(from)), t.c});
  return from_terms(std::move(r));
}

MultiPoly MultiPoly::scale_var(Var v, const FieldElement& c) const {
  MultiPoly r = *this;
  std::vector<FieldElement> powers{FieldElement(1)};
  for (auto& t : r.terms_) {
    unsigned e = t.m.exponent(v);
    while (powers.size() <= e) powers.push_back(powers.back() * c);
    t.c *= powers[e];
  }
  return r;
}

MultiPoly MultiPoly::reverse(Var v, unsigned deg) const {
  std::vector<Term> r;
  for (auto& t : terms_) {
    unsigned e = t.m.exponent(v);
    if (e > deg) throw AlgebraError("reverse: degree too small");
    r.push_back({t.m.with(v, deg - e), t.c});
  }
  return from_terms(std::move(r));
}

Monomial MultiPoly::min_monomial() const {
  if (terms_.empty()) return Monomial();
  Monomial m = terms_[0].m;
  for (auto& t : terms_) m = Monomial::gcd(m, t.m);
  return m;
}

MultiPoly MultiPoly::div_monomial(const Monomial& m) const {
  MultiPoly r = *this;
  if (m.is_one()) return r;
  for (auto& t : r.terms_) t.m = t.m / m;
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw AlgebraError("division by zero polynomial");
  if (is_zero()) return MultiPoly();
  if (d.is_constant()) return scaled(d.constant_value().inverse());
  if (d.size() == 1) {
    const Monomial& m = d.terms_[0].m;
    for (auto& t : terms_)
      if (!m.divides(t.m)) return std::nullopt;
    return div_monomial(m).scaled(d.terms_[0].c.inverse());
  }
  // quick rejections
  Var v = *d.leading().m.top_var();
  unsigned dv = d.degree(v);
  if (degree(v) < dv) return std::nullopt;
  if (!d.leading().m.divides(leading().m)) return std::nullopt;
  for (int i = 0; i < kNumVars; ++i) {
    Var w = static_cast<Var>(i);
    if (degree(w) < d.degree(w)) return std::nullopt;
  }
  // long division in the top variable of d, coefficients divided recursively
  auto P = coefficients(v);
  auto D = d.coefficients(v);
  size_t n = P.size() - 1, m = D.size() - 1;
  std::vector<MultiPoly> Q(n - m + 1);
  for (size_t k = n + 1; k-- > m;) {
    if (P[k].is_zero()) continue;
    auto qk = P[k].divide_exact(D[m]);
    if (!qk) return std::nullopt;
    for (size_t i = 0; i <= m; ++i)
      if (!D[i].is_zero()) P[k - m + i] -= *qk * D[i];
    if (!P[k].is_zero()) return std::nullopt;
    Q[k - m] = std::move(*qk);
  }
  for (size_t k = 0; k < m; ++k)
    if (!P[k].is_zero()) return std::nullopt;
  return from_coefficients(v, Q);
}

MultiPoly MultiPoly::divexact(const MultiPoly& d) const {
  auto q = divide_exact(d);
  if (!q) throw AlgebraError("inexact division");
  return *q;
}

std::string monomial_string(const Monomial& m, bool latex) {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    if (!s.empty() && !latex) s += "*";
    s += latex ? var_latex(v) : var_name(v);
    if (e > 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return s;
}

namespace {

std::string render(const MultiPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : p.terms()) {
    std::string mono = monomial_string(t.m, latex);
    FieldElement c = t.c;
    bool neg = c.is_negative();
    if (neg) c = -c;
    std::string cs = latex ? c.to_latex() : c.to_string();
    if (c.is_compound()) cs = "(" + cs + ")";
    std::string term;
    if (mono.empty()) term = cs;
    else if (c.is_one()) term = mono;
    else term = cs + (latex ? " " : "*") + mono;
    if (first) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace

std::string MultiPoly::to_string() const { return render(*this, false); }
std::string MultiPoly::to_latex() const { return render(*this, true); }

}  // namespace kumfib
