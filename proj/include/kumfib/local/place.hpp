#pragma once

#include <string>
#include <vector>

#include "kumfib/algebra/ratfn.hpp"

namespace kumfib {

// A finite place is the set of roots of a squarefree polynomial in u, primitive over
// k[l1, l2] and scaled to a leading term with coefficient 1; such a bundle is only used when every quantity of interest has the same
// order at each of its roots. The place at infinity has degree 1.
struct Place {
  bool infinity = false;
  MultiPoly poly;

  static Place at_infinity() { return Place{true, MultiPoly(1)}; }
  static Place finite(const MultiPoly& f);
  unsigned degree() const;
  bool operator==(const Place& o) const { return infinity == o.infinity && poly == o.poly; }
  std::string to_string() const;
  std::string to_latex() const;
};

// order of f along the place; kNoOrder-style infinity (kInfiniteOrder) for f = 0
int valuation(const RatFn& f, const Place& p);
int valuation(const MultiPoly& f, const Place& p);

// Splits a finite place so that each of the given functions has constant order on every part.
std::vector<Place> refine(const Place& p, const std::vector<RatFn>& fns);

// Finite places (coprime, squarefree) carrying all roots of the given polynomials.
std::vector<Place> places_of(const std::vector<MultiPoly>& polys);

}  // namespace kumfib
