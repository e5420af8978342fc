#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kumfib/local/kodaira.hpp"

namespace kumfib {

class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// R_ij = (e_i, e'_j) with e = (inf, 0, 1, l1), e' = (inf, 0, 1, l2)
struct RPoint {
  int i = 0, j = 0;
  bool operator<(const RPoint& o) const { return i != o.i ? i < o.i : j < o.j; }
  bool operator==(const RPoint& o) const { return i == o.i && j == o.j; }
  std::string to_string() const { return std::to_string(i) + std::to_string(j); }
};

// A (-2)-curve of the double Kummer pencil or the strict transform of a curve in P1 x P1
// of bidegree (a, b) passing through R_ij with multiplicity m_ij.
struct Curve {
  enum class Kind { A, F, G, Pullback } kind = Kind::A;
  int i = 0, j = 0;
  int a = 0, b = 0;
  std::array<std::array<int, 4>, 4> mult{};
  std::string name;
};

// "A12", "F0", "G3", "B33", "P32", "L(00,11,23)"
Curve curve(const std::string& name);
int intersect(const Curve& c, const Curve& d);

// Every (-2)-curve the configuration knows: 24 basic curves, the 96 pullbacks of
// (1,1)-curves through three R-points in general position, and P33, P32.
const std::vector<Curve>& model_curves();

// (1,1)-curve through three R-points in general position, named canonically
std::string l11_name(std::vector<RPoint> markers);

class Divisor {
 public:
  Divisor() = default;
  static Divisor parse(const std::string& text);  // "2F0 + A02 + B33"
  void add(const std::string& curve, int multiplicity);
  const std::map<std::string, int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::string to_string() const;
  friend int operator*(const Divisor& d, const Divisor& e);
  int dot(const Curve& c) const;
  Divisor operator+(const Divisor& o) const;

 private:
  std::map<std::string, int> terms_;
};

// Matches the weighted dual graph against the affine Dynkin diagrams.
// A pair meeting twice is reported as I2 and a triangle as I3 (III and IV have the same graphs).
KodairaType classify_divisor(const Divisor& d);

struct PairCheck {
  bool disjoint_support = false;
  int product = 0;                       // D0 . Dinf
  std::vector<std::string> separating;   // curves C with D0.C != Dinf.C
  bool ok() const { return disjoint_support && product == 0 && separating.empty(); }
};
PairCheck fiber_pair_check(const Divisor& d0, const Divisor& dinf);

// 3 markers -> 0, 2 markers -> 1; markers sharing a line throw
int genus_pullback(const std::vector<RPoint>& markers);

}  // namespace kumfib
