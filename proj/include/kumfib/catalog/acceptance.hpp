#pragma once

#include <string>
#include <vector>

#include "kumfib/catalog/catalog.hpp"

namespace kumfib {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::vector<Check> details;
};

// The ten acceptance criteria; `only` restricts to the listed numbers.
std::vector<CriterionResult> acceptance_suite(const std::vector<int>& only = {});

// Property suites behind criterion 10, seeded.
std::vector<Check> property_suites(unsigned seed = 20240607);

}  // namespace kumfib
