#pragma once

#include <map>
#include <string>
#include <vector>

#include "kumfib/local/kodaira.hpp"
#include "kumfib/local/place.hpp"
#include "kumfib/weierstrass/model.hpp"

namespace kumfib {

struct LocalData {
  Place place;
  int k = 0;  // the model becomes minimal after scaling by pi^-k
  int ord_c4 = 0, ord_c6 = 0, ord_disc = 0;  // minimal model
  KodairaType type;
  int count() const { return static_cast<int>(place.degree()); }
};

// Orders on a minimal model at a single place, plus that model.
struct PlaceValuation {
  LocalData data;
  WeierstrassModel minimal;
};
PlaceValuation place_valuations(const WeierstrassModel& w, const Place& p);

using FiberMultiset = std::map<KodairaType, int>;

// "2I8 + 8I1" and back
std::string fiber_summary(const FiberMultiset& m);
std::string fiber_summary_latex(const FiberMultiset& m);
FiberMultiset parse_fiber_summary(const std::string& s);

struct FiberConfiguration {
  // every place where the model is singular or not minimal, infinity last
  std::vector<LocalData> places;
  std::vector<LocalData> fibers() const;  // singular ones
  FiberMultiset multiset() const;
  int euler_sum() const;
  std::string summary() const { return fiber_summary(multiset()); }
  // local data at p or at the special place containing p; smooth k = 0 data otherwise
  LocalData at(const Place& p) const;
};

// Places come from a coprime base of the numerator and denominator of disc and the
// denominators of c4, c6, together with any extra polynomials, refined until c4, c6 and
// disc have constant order on each part.
FiberConfiguration fiber_configuration(const WeierstrassModel& w, const std::vector<MultiPoly>& known = {});

}  // namespace kumfib
