#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kumfib/algebra/field.hpp"

namespace kumfib {

// Variable order is the lex order, last is most significant.
enum class Var : std::uint8_t { L1, L2, U, X1, X2, T, S, X, Y };
inline constexpr int kNumVars = 9;

const char* var_name(Var v);
const char* var_latex(Var v);
std::optional<Var> parse_var(std::string_view name);

class Monomial {
 public:
  using Bits = unsigned __int128;
  static constexpr int kBits = 14;
  static constexpr unsigned kMaxExponent = (1u << (kBits - 1)) - 1;

  Monomial() = default;
  static Monomial of(Var v, unsigned e = 1);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>(bits_ >> (kBits * static_cast<int>(v))) & ((1u << kBits) - 1);
  }
  Monomial with(Var v, unsigned e) const;
  unsigned total_degree() const;
  std::uint16_t support() const;
  bool is_one() const { return bits_ == 0; }
  bool divides(const Monomial& o) const;
  // highest variable present, or nullopt for 1
  std::optional<Var> top_var() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.bits_ != b.bits_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.bits_ < b.bits_; }
  friend bool operator>(const Monomial& a, const Monomial& b) { return a.bits_ > b.bits_; }

  Bits bits() const { return bits_; }

 private:
  explicit Monomial(Bits b) : bits_(b) {}
  static Bits guard();
  Bits bits_ = 0;
};

struct Term {
  Monomial m;
  FieldElement c;
};

using Bindings = std::map<Var, FieldElement>;

// Sparse polynomial with terms kept in strictly decreasing lex order, no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const FieldElement& c);
  MultiPoly(long c) : MultiPoly(FieldElement(c)) {}
  MultiPoly(int c) : MultiPoly(FieldElement(c)) {}
  static MultiPoly var(Var v);
  static MultiPoly monomial(const Monomial& m, const FieldElement& c = FieldElement(1));
  static MultiPoly from_terms(std::vector<Term> terms);
  // terms already strictly decreasing with nonzero coefficients
  static MultiPoly from_terms_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  FieldElement constant_value() const;  // throws unless constant
  FieldElement constant_term() const;
  const Term& leading() const { return terms_.front(); }
  const FieldElement& leading_coefficient() const { return terms_.front().c; }

  unsigned degree(Var v) const;
  unsigned low_degree(Var v) const;
  unsigned total_degree() const;
  std::uint16_t variables() const;
  bool has_var(Var v) const { return (variables() >> static_cast<int>(v)) & 1; }
  const NumberField* field() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly scaled(const FieldElement& c) const;
  MultiPoly shifted(const Monomial& m) const;  // multiply by a monomial
  MultiPoly pow(unsigned e) const;
  MultiPoly monic() const;

  MultiPoly derivative(Var v) const;
  std::vector<MultiPoly> coefficients(Var v) const;  // index = exponent of v
  static MultiPoly from_coefficients(Var v, const std::vector<MultiPoly>& c);
  MultiPoly coefficient(Var v, unsigned k) const;
  MultiPoly leading_coefficient(Var v) const { return coefficient(v, degree(v)); }

  MultiPoly substitute(Var v, const FieldElement& value) const;
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  MultiPoly substitute(const Bindings& b) const;
  MultiPoly rename(Var from, Var to) const;
  // p(v) -> p(c*v)
  MultiPoly scale_var(Var v, const FieldElement& c) const;
  // v^deg * p(1/v)
  MultiPoly reverse(Var v, unsigned deg) const;

  Monomial min_monomial() const;
  MultiPoly div_monomial(const Monomial& m) const;
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
  MultiPoly divexact(const MultiPoly& d) const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  std::vector<Term> terms_;
};

std::string monomial_string(const Monomial& m, bool latex = false);

}  // namespace kumfib
