#pragma once

#include <optional>
#include <string>

#include "kumfib/weierstrass/model.hpp"

namespace kumfib {

// u = (a s + b) / (c s + d), or u = s^n when n != 0
struct BaseMap {
  FieldElement a = 1, b = 0, c = 0, d = 1;
  int power = 0;

  static BaseMap identity() { return BaseMap{}; }
  static BaseMap mobius(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
  static BaseMap scaling(const FieldElement& c) { return mobius(c, 0, 0, 1); }
  static BaseMap inversion() { return mobius(0, 1, 1, 0); }
  static BaseMap power_map(int n);

  RatFn to_ratfn() const;  // in u, standing for s
  std::string to_string() const;
};

// Coefficients composed with the map; the base variable keeps the name u.
WeierstrassModel base_change(const WeierstrassModel& w, const BaseMap& phi);
RatFn compose(const RatFn& f, const BaseMap& phi);

// Coordinate change of the glossary form (x, y) -> (w^2 x + r, w^3 y + s w^2 x + t).
inline WeierstrassModel admissible_transform(const WeierstrassModel& m, const RatFn& w, const RatFn& r,
                                             const RatFn& s, const RatFn& t) {
  return m.transform(r, s, t, w);
}

enum class IsoFamily {
  Auto,          // picked from the fiber positions
  Scaling,       // u -> c u
  ZeroInfinity,  // u -> c u and u -> c / u
  Affine,        // u -> c u + b
};

// Result of comparing two models over an algebraically closed constant field.
// Within the searched family of base maps, the models are isomorphic exactly when some
// map carries J(w1) to J(w2) and every singular fiber to one of the same type: once positions
// and types agree, the twisting cocycle has order divisible by its degree everywhere.
// Scale factors are solved as c^g = rho, so c may lie outside the coefficient field.
struct IsoResult {
  IsoFamily family = IsoFamily::Scaling;
  bool exhaustive = false;  // the family contains every possible witness
  bool j_match = false;     // some map in the family carries J(w1) to J(w2)
  bool isomorphic = false;  // a witness exists in the family
  std::string witness;      // e.g. "u -> c*u with c^2 = 1/2"
  std::string reason;
};

IsoResult iso_test(const WeierstrassModel& w1, const WeierstrassModel& w2, IsoFamily family = IsoFamily::Scaling);

std::string to_string(IsoFamily f);

}  // namespace kumfib
