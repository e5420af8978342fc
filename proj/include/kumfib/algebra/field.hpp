#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace kumfib {

using Integer = mpz_class;
using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple extension Q(a) = Q[x]/(m(x)). Instances are interned; compare by pointer.
// Q itself is represented by a null NumberField pointer.
class NumberField {
 public:
  // low-to-high coefficients of a monic minimal polynomial (leading 1 included)
  static const NumberField* get(std::vector<Rational> minpoly, std::string generator);
  static const NumberField* omega();             // x^2 + x + 1
  static const NumberField* sqrt(long d);        // x^2 - d, d not a square
  static const NumberField* parse(const std::string& spec);  // "Q", "Q(omega)", "Q(sqrt(5))"

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  const std::string& generator() const { return gen_; }
  std::string name() const;

  // x^k reduced mod m, for k < 2*degree-1
  const std::vector<Rational>& power(int k) const { return powers_[k]; }

 private:
  NumberField(std::vector<Rational> minpoly, std::string gen);
  std::vector<Rational> minpoly_;
  std::string gen_;
  std::vector<std::vector<Rational>> powers_;
};

// The smallest of two fields containing both; throws if they are distinct extensions.
const NumberField* join_fields(const NumberField* a, const NumberField* b);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : q_(v) {}
  FieldElement(int v) : q_(v) {}
  FieldElement(const Rational& v) : q_(v) {}
  FieldElement(const Integer& v) : q_(v) {}
  FieldElement(const NumberField* f, std::vector<Rational> coeffs);

  static FieldElement generator(const NumberField* f);

  bool is_rational() const { return field_ == nullptr; }
  const Rational& rational() const;
  const NumberField* field() const { return field_; }
  // coefficients in the power basis of field(); size == degree
  std::vector<Rational> coefficients() const;

  bool is_zero() const { return field_ == nullptr && sgn(q_) == 0; }
  bool is_one() const { return field_ == nullptr && q_ == 1; }
  bool is_integer() const { return field_ == nullptr && q_.get_den() == 1; }

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // a*b added in place; avoids a temporary on the rational fast path
  void add_product(const FieldElement& a, const FieldElement& b);

  // true if printing needs parentheses inside a product
  bool is_compound() const;
  bool is_negative() const;  // rational and < 0, or leading basis coefficient < 0
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void demote();
  Rational q_;
  std::vector<Rational> c_;
  const NumberField* field_ = nullptr;
};

// Rational square root, if one exists.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace kumfib
