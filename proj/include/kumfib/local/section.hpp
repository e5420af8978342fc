#pragma once

#include <string>
#include <vector>

#include "kumfib/local/fibers.hpp"

namespace kumfib {

// How a section meets the fiber over each root of a place.
struct SectionLocal {
  Place place;
  KodairaType type;
  int zero_meet = 0;            // intersection with O at each root
  std::string component;        // "O" for the identity component
  Rational contribution = 0;    // correction term at each root
  Rational total_contribution() const { return contribution * Rational(place.degree()); }
  int total_zero_meet() const { return zero_meet * static_cast<int>(place.degree()); }
};

// Local data of P at every place where it meets O or a non-identity component.
// Throws ClassificationError when the component cannot be identified.
std::vector<SectionLocal> section_components(const WeierstrassModel& w, const FiberConfiguration& cfg,
                                             const Point& p);

// (P.O) summed over all places
int zero_intersection(const std::vector<SectionLocal>& s);
Rational total_contribution(const std::vector<SectionLocal>& s);

}  // namespace kumfib
