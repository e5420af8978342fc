#pragma once

#include <string>

#include "kumfib/algebra/multipoly.hpp"

namespace kumfib {

class PoleError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Reduced quotient num/den with the leading coefficient of den equal to 1.
class RatFn {
 public:
  RatFn() : den_(1) {}
  RatFn(const MultiPoly& p) : num_(p), den_(1) {}
  RatFn(const FieldElement& c) : num_(c), den_(1) {}
  RatFn(long c) : num_(c), den_(1) {}
  RatFn(int c) : num_(c), den_(1) {}
  RatFn(const MultiPoly& num, const MultiPoly& den);
  static RatFn var(Var v) { return RatFn(MultiPoly::var(v)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  FieldElement constant_value() const;
  std::uint16_t variables() const { return num_.variables() | den_.variables(); }
  bool has_var(Var v) const { return num_.has_var(v) || den_.has_var(v); }

  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);
  RatFn operator-() const;
  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  RatFn inverse() const;
  RatFn pow(int e) const;
  RatFn derivative(Var v) const;

  // throws PoleError when the denominator vanishes under the bindings
  RatFn specialize(const Bindings& b) const;
  RatFn substitute(Var v, const RatFn& value) const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  struct Raw {};
  RatFn(MultiPoly num, MultiPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_leading();
  MultiPoly num_;
  MultiPoly den_;
};

// Quotient and remainder in v over the fraction field of the other variables.
struct DivRem {
  RatFn quotient;
  RatFn remainder;
};
DivRem divrem(const MultiPoly& p, const MultiPoly& q, Var v);

// order of a rational function in u at u = infinity: deg den - deg num
int order_at_infinity(const RatFn& f, Var v);

}  // namespace kumfib
