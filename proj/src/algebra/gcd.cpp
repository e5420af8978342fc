#include "kumfib/algebra/gcd.hpp"

#include <algorithm>
#include <random>

namespace kumfib {

namespace {

using Dense = std::vector<FieldElement>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void make_monic(Dense& p) {
  if (p.empty() || p.back().is_one()) return;
  FieldElement inv = p.back().inverse();
  for (auto& c : p) c *= inv;
}

Dense dense_rem(Dense a, const Dense& b) {
  trim(a);
  FieldElement inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    size_t sh = a.size() - b.size();
    FieldElement f = a.back() * inv;
    for (size_t i = 0; i < b.size(); ++i) a[i + sh] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

std::vector<Var> vars_of(std::uint16_t mask) {
  std::vector<Var> r;
  for (int i = 0; i < kNumVars; ++i)
    if ((mask >> i) & 1) r.push_back(static_cast<Var>(i));
  return r;
}

// image of p in K[v] after sending the other variables to fixed values
Dense evaluate_except(const MultiPoly& p, Var v, const std::vector<FieldElement>& point) {
  Dense r(p.degree(v) + 1);
  std::vector<std::vector<FieldElement>> pw(kNumVars);
  for (auto& t : p.terms()) {
    FieldElement c = t.c;
    for (int i = 0; i < kNumVars; ++i) {
      Var w = static_cast<Var>(i);
      if (w == v) continue;
      unsigned e = t.m.exponent(w);
      if (e == 0) continue;
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(FieldElement(1));
      while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
      c *= cache[e];
    }
    r[t.m.exponent(v)] += c;
  }
  trim(r);
  return r;
}

// upper bound for deg_v gcd(a, b); a and b share no monomial factor
unsigned degree_bound(const MultiPoly& a, const MultiPoly& b, Var v, std::mt19937& rng) {
  unsigned da = a.degree(v), db = b.degree(v);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<FieldElement> point(kNumVars);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (auto& x : point) x = FieldElement(dist(rng));
    Dense ia = evaluate_except(a, v, point), ib = evaluate_except(b, v, point);
    if (ia.size() != da + 1 || ib.size() != db + 1) continue;
    return static_cast<unsigned>(dense_gcd(ia, ib).size() - 1);
  }
  return std::min(da, db);
}

MultiPoly gcd_primitive_free(MultiPoly a, MultiPoly b);

bool all_rational(const MultiPoly& p) {
  for (auto& t : p.terms())
    if (!t.c.is_rational()) return false;
  return true;
}

// p scaled to integer coefficients with content 1
MultiPoly integer_primitive(const MultiPoly& p, Integer* content_out = nullptr) {
  Integer l = 1, g = 0;
  for (auto& t : p.terms()) l = lcm(l, Integer(t.c.rational().get_den()));
  std::vector<Term> out;
  out.reserve(p.size());
  for (auto& t : p.terms()) {
    Integer z(t.c.rational() * Rational(l));
    g = ::gcd(g, z);
    out.push_back({t.m, FieldElement(Rational(z))});
  }
  if (content_out) *content_out = g;
  if (g != 1 && g != 0)
    for (auto& t : out) t.c = FieldElement(Rational(Integer(t.c.rational().get_num() / g)));
  MultiPoly r;
  r = MultiPoly::from_terms(std::move(out));
  return r;
}

Integer max_norm(const MultiPoly& p) {
  Integer m = 0;
  for (auto& t : p.terms()) {
    Integer a = abs(t.c.rational().get_num());
    if (a > m) m = a;
  }
  return m;
}

// symmetric xi-adic expansion of h's integer coefficients into powers of x
MultiPoly interpolate(MultiPoly h, const Integer& xi, Var x) {
  std::vector<Term> out;
  Integer half = xi / 2;
  unsigned k = 0;
  while (!h.is_zero()) {
    std::vector<Term> digit, rest;
    for (auto& t : h.terms()) {
      Integer c = t.c.rational().get_num();
      Integer r = c % xi;
      if (r < 0) r += xi;
      if (r > half) r -= xi;
      if (r != 0) out.push_back({t.m.with(x, k), FieldElement(Rational(r))});
      Integer q = (c - r) / xi;
      if (q != 0) rest.push_back({t.m, FieldElement(Rational(q))});
    }
    h = MultiPoly::from_terms(std::move(rest));
    ++k;
    if (k > 4096) throw AlgebraError("interpolation runaway");
  }
  return MultiPoly::from_terms(std::move(out));
}

// Char-Geddes-Gonnet heuristic gcd over Z; nullopt when the heuristic gives up
std::optional<MultiPoly> heu_gcd(const MultiPoly& f0, const MultiPoly& g0, int depth) {
  Integer cf, cg;
  MultiPoly f = integer_primitive(f0, &cf), g = integer_primitive(g0, &cg);
  Integer gc = ::gcd(cf, cg);
  std::uint16_t vars = f.variables() | g.variables();
  if (vars == 0) return MultiPoly(FieldElement(Rational(gc)));
  Var x = Var::L1;
  for (int i = kNumVars; i-- > 0;)
    if ((vars >> i) & 1) {
      x = static_cast<Var>(i);
      break;
    }
  Integer fn = max_norm(f), gn = max_norm(g);
  Integer B = 2 * std::min(fn, gn) + 29;
  Integer lf = abs(f.leading_coefficient().rational().get_num());
  Integer lg = abs(g.leading_coefficient().rational().get_num());
  Integer xi = std::max(Integer(std::min(B, Integer(99 * ::sqrt(B)))), Integer(2 * std::min(fn / lf, gn / lg) + 2));
  for (int attempt = 0; attempt < 6; ++attempt) {
    MultiPoly ff = f.substitute(x, FieldElement(Rational(xi)));
    MultiPoly gg = g.substitute(x, FieldElement(Rational(xi)));
    if (!ff.is_zero() && !gg.is_zero()) {
      auto h = heu_gcd(ff, gg, depth + 1);
      if (h) {
        MultiPoly H = integer_primitive(interpolate(*h, xi, x));
        if (!H.is_zero() && H.leading_coefficient().is_negative()) H = -H;
        if (!H.is_zero() && f.divide_exact(H) && g.divide_exact(H)) return H.scaled(FieldElement(Rational(gc)));
      }
    }
    xi = 73794 * xi * Integer(::sqrt(::sqrt(xi))) / 27011;
  }
  return std::nullopt;
}

MultiPoly subresultant(MultiPoly a, MultiPoly b, Var v) {
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  MultiPoly g(1), h(1);
  while (true) {
    unsigned delta = a.degree(v) - b.degree(v);
    MultiPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return primitive_part(b, v);
    if (r.degree(v) == 0) return MultiPoly(1);
    a = std::move(b);
    b = r.divexact(g * h.pow(delta));
    g = a.leading_coefficient(v);
    if (delta > 0) h = g.pow(delta).divexact(h.pow(delta - 1));
  }
}

MultiPoly gcd_primitive_free(MultiPoly a, MultiPoly b) {
  static thread_local std::mt19937 rng(20240917);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a.size() == 1 || b.size() == 1) return MultiPoly(1);
  std::uint16_t va = a.variables(), vb = b.variables();
  if (va != vb) {
    // the gcd cannot involve a variable present in only one argument
    for (Var v : vars_of(va & ~vb)) a = content(a, v);
    for (Var v : vars_of(vb & ~va)) b = content(b, v);
    return gcd(a, b);
  }
  std::vector<Var> vs = vars_of(a.variables());
  if (vs.size() == 1) return univariate_gcd(a, b, vs[0]);
  if (a == b) return a.monic();
  Var best = vs[0];
  unsigned best_cost = ~0u;
  bool all_full_a = true, all_full_b = true;
  for (Var v : vs) {
    unsigned bd = degree_bound(a, b, v, rng);
    if (bd != a.degree(v)) all_full_a = false;
    if (bd != b.degree(v)) all_full_b = false;
    if (bd == 0) {
      // gcd is free of v: reduce to the gcd of the coefficients
      MultiPoly g = content(a, v);
      if (g.is_constant()) return MultiPoly(1);
      g = gcd(g, content(b, v));
      return g;
    }
    unsigned cost = std::max(a.degree(v), b.degree(v));
    if (cost < best_cost) {
      best_cost = cost;
      best = v;
    }
  }
  if (all_full_a) {
    if (auto q = b.divide_exact(a)) return a.monic();
  }
  if (all_full_b) {
    if (auto q = a.divide_exact(b)) return b.monic();
  }
  if (all_rational(a) && all_rational(b)) {
    if (auto h = heu_gcd(a, b, 0)) return h->monic();
  }
  MultiPoly ca = content(a, best), cb = content(b, best);
  MultiPoly c = gcd(ca, cb);
  MultiPoly pa = a.divexact(ca), pb = b.divexact(cb);
  MultiPoly g = subresultant(pa, pb, best);
  return (c * g).monic();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Monomial ma = a.min_monomial(), mb = b.min_monomial();
  Monomial m = Monomial::gcd(ma, mb);
  MultiPoly g = gcd_primitive_free(a.div_monomial(ma), b.div_monomial(mb));
  return g.shifted(m).monic();
}

MultiPoly content(const MultiPoly& p, Var v) {
  if (!p.has_var(v)) return p.monic();
  auto cs = p.coefficients(v);
  std::vector<MultiPoly> nz;
  for (auto& c : cs)
    if (!c.is_zero()) nz.push_back(std::move(c));
  std::sort(nz.begin(), nz.end(), [](const MultiPoly& x, const MultiPoly& y) { return x.size() < y.size(); });
  MultiPoly g = nz[0].monic();
  for (size_t i = 1; i < nz.size() && !g.is_constant(); ++i) g = gcd(g, nz[i]);
  return g;
}

MultiPoly primitive_part(const MultiPoly& p, Var v) {
  if (p.is_zero()) return p;
  return p.divexact(content(p, v)).monic();
}

std::vector<FieldElement> to_dense(const MultiPoly& p, Var v) {
  Dense r(p.degree(v) + 1);
  for (auto& t : p.terms()) {
    if (t.m.with(v, 0) != Monomial()) throw AlgebraError("polynomial is not univariate in " + std::string(var_name(v)));
    r[t.m.exponent(v)] = t.c;
  }
  trim(r);
  return r;
}

MultiPoly from_dense(const std::vector<FieldElement>& c, Var v) {
  std::vector<Term> t;
  for (size_t i = c.size(); i-- > 0;)
    if (!c[i].is_zero()) t.push_back({Monomial::of(v, static_cast<unsigned>(i)), c[i]});
  return MultiPoly::from_terms(std::move(t));
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, Var v) {
  return from_dense(dense_gcd(to_dense(a, v), to_dense(b, v)), v);
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
  unsigned n = a.degree(v), m = b.degree(v);
  if (b.is_zero()) throw AlgebraError("pseudo-remainder by zero");
  if (n < m) return a;
  auto P = a.coefficients(v);
  auto D = b.coefficients(v);
  const MultiPoly& l = D[m];
  for (size_t k = n + 1; k-- > m;) {
    MultiPoly c = std::move(P[k]);
    P[k] = MultiPoly();
    for (size_t j = 0; j < k; ++j)
      if (!P[j].is_zero()) P[j] *= l;
    if (c.is_zero()) continue;
    for (size_t i = 0; i < m; ++i)
      if (!D[i].is_zero()) P[k - m + i] -= c * D[i];
  }
  P.resize(m);
  return MultiPoly::from_coefficients(v, P);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const MultiPoly& p, Var v) {
  std::vector<SquarefreeFactor> out;
  if (p.is_zero()) throw AlgebraError("squarefree decomposition of zero");
  MultiPoly f = primitive_part(p, v);
  if (f.degree(v) == 0) return out;
  MultiPoly fd = f.derivative(v);
  MultiPoly a0 = gcd(f, fd);
  MultiPoly b = f.divexact(a0);
  MultiPoly c = fd.divexact(a0);
  MultiPoly d = c - b.derivative(v);
  unsigned i = 1;
  while (b.degree(v) > 0) {
    MultiPoly a = gcd(b, d);
    MultiPoly bn = b.divexact(a);
    c = d.divexact(a);
    d = c - bn.derivative(v);
    if (a.degree(v) > 0) out.push_back({primitive_part(a, v), i});
    b = std::move(bn);
    ++i;
  }
  return out;
}

std::vector<MultiPoly> coprime_base(const std::vector<MultiPoly>& polys, Var v) {
  std::vector<MultiPoly> result;
  std::vector<MultiPoly> pending;
  for (auto& p : polys) {
    if (p.is_zero() || p.degree(v) == 0) continue;
    for (auto& f : squarefree_decomposition(p, v)) pending.push_back(f.factor);
  }
  while (!pending.empty()) {
    MultiPoly g = std::move(pending.back());
    pending.pop_back();
    for (size_t i = 0; i < result.size() && g.degree(v) > 0;) {
      MultiPoly h = gcd(g, result[i]);
      if (h.degree(v) == 0) {
        ++i;
        continue;
      }
      MultiPoly r = result[i].divexact(h);
      result.erase(result.begin() + static_cast<long>(i));
      result.push_back(primitive_part(h, v));
      if (r.degree(v) > 0) result.push_back(primitive_part(r, v));
      g = g.divexact(h);
      i = 0;
    }
    if (g.degree(v) > 0) result.push_back(primitive_part(g, v));
  }
  std::sort(result.begin(), result.end(), [v](const MultiPoly& a, const MultiPoly& b) {
    if (a.degree(v) != b.degree(v)) return a.degree(v) < b.degree(v);
    return a.to_string() < b.to_string();
  });
  return result;
}

std::vector<OrderPiece> split_by_order(const MultiPoly& f, const MultiPoly& p, Var v) {
  std::vector<OrderPiece> out;
  if (p.is_zero()) {
    out.push_back({f, kInfiniteOrder});
    return out;
  }
  MultiPoly rest = f, cur = p;
  int k = 0;
  while (rest.degree(v) > 0) {
    MultiPoly g = gcd(rest, cur);
    MultiPoly exact = rest.divexact(g);
    if (exact.degree(v) > 0) out.push_back({primitive_part(exact, v), k});
    if (g.degree(v) == 0) break;
    rest = primitive_part(g, v);
    cur = cur.divexact(g);
    ++k;
  }
  return out;
}

int order_at(const MultiPoly& f, const MultiPoly& p, Var) {
  if (p.is_zero()) return kInfiniteOrder;
  int k = 0;
  MultiPoly cur = p;
  while (true) {
    auto q = cur.divide_exact(f);
    if (!q) return k;
    cur = std::move(*q);
    ++k;
  }
}

}  // namespace kumfib

namespace kumfib {

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
  if (p.is_zero()) return MultiPoly();
  const Term& lt = p.leading();
  if (!lt.c.is_rational()) return std::nullopt;
  Rational c;
  if (!rational_sqrt(lt.c.rational(), c)) return std::nullopt;
  Monomial m;
  for (int v = 0; v < kNumVars; ++v) {
    unsigned e = lt.m.exponent(static_cast<Var>(v));
    if (e % 2) return std::nullopt;
    m = m * Monomial::of(static_cast<Var>(v), e / 2);
  }
  Monomial low = p.min_monomial();
  MultiPoly r = MultiPoly::monomial(m, FieldElement(c));
  FieldElement two_lc = FieldElement(2) * FieldElement(c);
  Monomial last = m;
  while (true) {
    MultiPoly rem = p - r * r;
    if (rem.is_zero()) return r;
    const Term& t = rem.leading();
    if (!m.divides(t.m)) return std::nullopt;
    Monomial q = t.m / m;
    if (!(q < last)) return std::nullopt;
    for (int v = 0; v < kNumVars; ++v)
      if (2 * q.exponent(static_cast<Var>(v)) < low.exponent(static_cast<Var>(v))) return std::nullopt;
    r += MultiPoly::monomial(q, t.c / two_lc);
    last = q;
  }
}

}  // namespace kumfib
