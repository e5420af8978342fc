#pragma once

#include <stdexcept>
#include <string>

namespace kumfib {

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class KodairaFamily { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };

struct KodairaType {
  KodairaFamily family = KodairaFamily::I;
  int n = 0;  // for I_n and I_n*

  static KodairaType I(int n) { return {KodairaFamily::I, n}; }
  static KodairaType Istar(int n) { return {KodairaFamily::Istar, n}; }
  static KodairaType parse(const std::string& s);

  bool smooth() const { return family == KodairaFamily::I && n == 0; }
  bool multiplicative() const { return family == KodairaFamily::I && n > 0; }
  bool additive() const { return family != KodairaFamily::I; }
  int components() const;
  int euler() const;
  // "A7", "D4", "E6", or "" for irreducible fibers
  std::string root_lattice() const;
  int lattice_rank() const { return components() - 1; }
  // order of the discriminant group of the fiber root lattice
  int lattice_det() const;
  std::string name() const;
  std::string latex() const;

  friend bool operator==(const KodairaType& a, const KodairaType& b) { return a.family == b.family && a.n == b.n; }
  friend bool operator!=(const KodairaType& a, const KodairaType& b) { return !(a == b); }
  friend bool operator<(const KodairaType& a, const KodairaType& b) {
    return a.family != b.family ? a.family < b.family : a.n < b.n;
  }
};

inline constexpr int kNoOrder = 1 << 30;  // valuation of zero

// Kodaira type from valuations of c4, c6, disc of a minimal model (characteristic 0).
KodairaType classify_kodaira(int ord_c4, int ord_c6, int ord_disc);

struct MinimalOrders {
  int k = 0;  // model scaled by pi^-k
  int c4 = 0, c6 = 0, disc = 0;
};

// k = min(floor(ord c4 / 4), floor(ord c6 / 6)); zero invariants count as infinite order.
MinimalOrders minimalize(int ord_c4, int ord_c6, int ord_disc);

}  // namespace kumfib
