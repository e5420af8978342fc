#include "kumfib/local/section.hpp"

#include "kumfib/algebra/gcd.hpp"

namespace kumfib {

namespace {

Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Rational contribution(const KodairaType& t, int ord_disc, int o2, int o3) {
  if (t.smooth()) return 0;
  if (t.multiplicative()) {
    Rational m = std::min(Rational(o2), frac(ord_disc, 2));
    m.canonicalize();
    Rational c = m * (Rational(ord_disc) - m) / Rational(ord_disc);
    c.canonicalize();
    return c;
  }
  return o3 >= 3 * o2 ? frac(2 * o2, 3) : frac(o3, 4);
}

std::string component_label(const KodairaType& t, const Rational& c, int o2, int ord_disc) {
  auto bad = [&] {
    return ClassificationError("ambiguous component: contribution " + c.get_str() + " at a fiber of type " + t.name());
  };
  if (sgn(c) == 0) return "O";
  switch (t.family) {
    case KodairaFamily::I: {
      int i = std::min(o2, ord_disc / 2);
      if (frac(i * (ord_disc - i), ord_disc) != c) throw bad();
      return "Theta" + std::to_string(i);
    }
    case KodairaFamily::Istar:
      if (c == 1 && t.n > 0) return "near";
      if (c == frac(4 + t.n, 4)) return t.n == 0 ? "simple" : "far";
      throw bad();
    case KodairaFamily::III:
    case KodairaFamily::IIIstar:
      if (c == frac(t.family == KodairaFamily::III ? 1 : 3, 2)) return "simple";
      throw bad();
    case KodairaFamily::IV:
    case KodairaFamily::IVstar:
      if (c == frac(t.family == KodairaFamily::IV ? 2 : 4, 3)) return "simple";
      throw bad();
    default:
      throw bad();
  }
}

}  // namespace

std::vector<SectionLocal> section_components(const WeierstrassModel& w, const FiberConfiguration& cfg,
                                             const Point& p) {
  std::vector<SectionLocal> out;
  if (p.infinity) return out;
  Invariants inv = w.invariants();
  // short model y^2 = x^3 + A x + B
  RatFn xs = RatFn(36) * p.x + RatFn(3) * inv.b2;
  RatFn ys = RatFn(108) * (RatFn(2) * p.y + w.a1() * p.x + w.a3());
  RatFn A = RatFn(-27) * inv.c4, B = RatFn(-54) * inv.c6;
  RatFn fx = RatFn(3) * xs * xs + A;
  RatFn psi3 = RatFn(3) * xs.pow(4) + RatFn(6) * A * xs * xs + RatFn(12) * B * xs - A * A;
  std::vector<MultiPoly> extra;
  for (auto& d : cfg.places)
    if (!d.place.infinity) extra.push_back(d.place.poly);
  extra.push_back(xs.den());
  std::vector<Place> places;
  for (auto& base : places_of(extra))
    for (auto& pl : refine(base, {xs, ys, fx, psi3})) places.push_back(pl);
  places.push_back(Place::at_infinity());
  for (auto& pl : places) {
    LocalData d = cfg.at(pl);
    int ox = valuation(xs, pl);
    if (ox >= kInfiniteOrder) ox = kInfiniteOrder;
    else ox -= 2 * d.k;
    SectionLocal s;
    s.place = pl;
    s.type = d.type;
    if (ox < 0) {
      if (ox % 2) throw ClassificationError("x-coordinate has an odd pole at " + pl.to_string());
      s.zero_meet = -ox / 2;
      s.component = "O";
      out.push_back(s);
      continue;
    }
    if (d.type.smooth()) continue;
    int o2 = valuation(ys, pl), o3 = valuation(psi3, pl), of = valuation(fx, pl);
    // reduction is a smooth point of the Weierstrass fiber
    if (o2 - 3 * d.k <= 0 || (of < kInfiniteOrder && of - 4 * d.k <= 0)) continue;
    o2 = o2 >= kInfiniteOrder ? kInfiniteOrder / 4 : o2 - 3 * d.k;
    o3 = o3 >= kInfiniteOrder ? kInfiniteOrder / 4 : o3 - 8 * d.k;
    s.contribution = contribution(d.type, d.ord_disc, o2, o3);
    s.component = component_label(d.type, s.contribution, o2, d.ord_disc);
    if (sgn(s.contribution) != 0) out.push_back(s);
  }
  return out;
}

int zero_intersection(const std::vector<SectionLocal>& s) {
  int n = 0;
  for (auto& x : s) n += x.total_zero_meet();
  return n;
}

Rational total_contribution(const std::vector<SectionLocal>& s) {
  Rational c = 0;
  for (auto& x : s) c += x.total_contribution();
  return c;
}

}  // namespace kumfib
