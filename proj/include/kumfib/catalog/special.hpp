#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kumfib/catalog/catalog.hpp"
#include "kumfib/weierstrass/iso.hpp"

namespace kumfib {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecialEquation {
  std::string label;
  std::string type;
  std::string field = "Q";
  std::string curve;  // as written, "y^2 = ..."
  std::optional<std::string> j;
  std::optional<std::pair<std::string, std::string>> lambda;
  int line = 0;
};

struct SpecialPair {
  std::string type, first, second;
};

struct SpecialFixtures {
  std::vector<SpecialEquation> equations;
  std::vector<SpecialPair> pairs;
  const SpecialEquation& at(const std::string& label) const;
};

// KUMFIB_FIXTURES if set, else the copy in the source tree
std::string default_fixtures_path();
SpecialFixtures parse_special_fixtures(const std::string& text);
SpecialFixtures load_special_fixtures(const std::string& path = default_fixtures_path());

WeierstrassModel special_model(const SpecialEquation& e);

// Reducible fibers agree as root lattices and the Euler numbers sum to 24; irreducible
// fibers may differ since I1 fibers can collide into II at special parameters.
bool same_reducible_fibers(const FiberMultiset& a, const FiberMultiset& b);

struct SpecialRecord {
  std::string label, type, field;
  RatFn j;
  bool j_given = false;
  bool j_match = false;
  std::string fibers, expected_fibers;
  bool fibers_exact = false;
  bool fibers_match = false;
  std::optional<Check> lambda_check;  // construct at the stated lambda, then iso_test
  bool ok() const;
};

struct PairRecord {
  SpecialPair pair;
  IsoResult iso;
  bool confirmed = false;  // nonisomorphic by an exhaustive test
};

struct SpecialReport {
  std::vector<SpecialRecord> equations;
  std::vector<PairRecord> pairs;
  bool ok() const;
};

SpecialReport special_case_suite(const SpecialFixtures& fx = load_special_fixtures());

// Legendre values of C1: y^2 = x^3 - x and C2: y^2 = x^3 - 1, in Q(omega).
std::vector<FieldElement> legendre_values_c1();
std::vector<FieldElement> legendre_values_c2();

// Searches the Legendre assignments (both orders) for one whose construct(tag) is
// carried onto the equation by iso_test; returns "l1 = ..., l2 = ...: witness".
std::optional<std::string> find_assignment(const SpecialEquation& e);

}  // namespace kumfib
