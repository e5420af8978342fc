#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "kumfib/algebra/ratfn.hpp"

namespace kumfib {

// Immutable expression tree over FieldElement constants and variables.
class Expr {
 public:
  enum class Kind { Const, Variable, Add, Sub, Mul, Div, Neg, Pow };

  Expr() : Expr(FieldElement(0)) {}
  Expr(const FieldElement& c);
  Expr(long c) : Expr(FieldElement(c)) {}
  Expr(int c) : Expr(FieldElement(c)) {}
  static Expr var(Var v);
  static Expr rational(long num, long den);

  Kind kind() const { return node_->kind; }
  const FieldElement& value() const { return node_->value; }
  Var variable() const { return node_->var; }
  int exponent() const { return node_->exponent; }
  const Expr& lhs() const { return *node_->a; }
  const Expr& rhs() const { return *node_->b; }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;
  Expr pow(int e) const;

  // replaces variables by expressions
  Expr substitute(const std::map<Var, Expr>& s) const;

  template <class R>
  R evaluate(const std::function<R(Var)>& leaf) const;

  std::uint16_t variables() const;
  std::string to_string() const;
  std::string to_latex() const;

 private:
  struct Node {
    Kind kind;
    FieldElement value;
    Var var = Var::U;
    int exponent = 0;
    std::shared_ptr<const Expr> a, b;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Kind k, const Expr& a, const Expr* b, int e = 0);
  std::shared_ptr<const Node> node_;
};

template <class R>
R Expr::evaluate(const std::function<R(Var)>& leaf) const {
  switch (kind()) {
    case Kind::Const:
      return R(value());
    case Kind::Variable:
      return leaf(variable());
    case Kind::Add:
      return lhs().evaluate<R>(leaf) + rhs().evaluate<R>(leaf);
    case Kind::Sub:
      return lhs().evaluate<R>(leaf) - rhs().evaluate<R>(leaf);
    case Kind::Mul:
      return lhs().evaluate<R>(leaf) * rhs().evaluate<R>(leaf);
    case Kind::Div:
      return lhs().evaluate<R>(leaf) / rhs().evaluate<R>(leaf);
    case Kind::Neg:
      return -lhs().evaluate<R>(leaf);
    case Kind::Pow:
      return lhs().evaluate<R>(leaf).pow(exponent());
  }
  throw AlgebraError("bad expression node");
}

RatFn to_ratfn(const Expr& e);
// throws if e has a non-constant denominator
MultiPoly to_poly(const Expr& e);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Infix syntax: integers, + - * / ^, parentheses. Identifiers are looked up in
// `names`, then as variable names; the generator of `field` is spelled as in
// NumberField::generator() ("omega", "i", "sqrt(5)").
Expr parse_expr(std::string_view text, const NumberField* field = nullptr,
                const std::map<std::string, Expr>& names = {});

}  // namespace kumfib
