#include "kumfib/local/place.hpp"

#include "kumfib/algebra/gcd.hpp"

namespace kumfib {

Place Place::finite(const MultiPoly& f) {
  if (f.degree(Var::U) == 0) throw AlgebraError("place polynomial must involve u");
  MultiPoly g = primitive_part(f, Var::U);
  FieldElement lc = g.leading_coefficient();
  return Place{false, g.scaled(lc.inverse())};
}

unsigned Place::degree() const { return infinity ? 1 : poly.degree(Var::U); }

std::string Place::to_string() const { return infinity ? "inf" : poly.to_string(); }

std::string Place::to_latex() const { return infinity ? "\\infty" : poly.to_latex(); }

int valuation(const MultiPoly& f, const Place& p) {
  if (f.is_zero()) return kInfiniteOrder;
  if (p.infinity) return -static_cast<int>(f.degree(Var::U));
  return order_at(p.poly, f, Var::U);
}

int valuation(const RatFn& f, const Place& p) {
  if (f.is_zero()) return kInfiniteOrder;
  if (p.infinity) return order_at_infinity(f, Var::U);
  return order_at(p.poly, f.num(), Var::U) - order_at(p.poly, f.den(), Var::U);
}

std::vector<Place> refine(const Place& p, const std::vector<RatFn>& fns) {
  if (p.infinity) return {p};
  std::vector<MultiPoly> parts{p.poly};
  auto split = [&](const MultiPoly& q) {
    if (q.is_zero() || q.degree(Var::U) == 0) return;
    std::vector<MultiPoly> next;
    for (auto& part : parts)
      for (auto& piece : split_by_order(part, q, Var::U)) next.push_back(piece.part);
    parts = std::move(next);
  };
  for (auto& f : fns) {
    split(f.num());
    split(f.den());
  }
  std::vector<Place> out;
  for (auto& part : parts)
    if (part.degree(Var::U) > 0) out.push_back(Place::finite(part));
  return out;
}

std::vector<Place> places_of(const std::vector<MultiPoly>& polys) {
  std::vector<MultiPoly> in;
  for (auto& p : polys)
    if (!p.is_zero() && p.degree(Var::U) > 0) in.push_back(p);
  std::vector<Place> out;
  for (auto& b : coprime_base(in, Var::U))
    if (b.degree(Var::U) > 0) out.push_back(Place::finite(b));
  return out;
}

}  // namespace kumfib
