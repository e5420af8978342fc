#include "kumfib/algebra/expr.hpp"

#include <cctype>

namespace kumfib {

Expr::Expr(const FieldElement& c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = c;
  node_ = std::move(n);
}

Expr Expr::var(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->var = v;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return Expr(FieldElement(q));
}

Expr Expr::make(Kind k, const Expr& a, const Expr* b, int e) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::make_shared<const Expr>(a);
  if (b) n->b = std::make_shared<const Expr>(*b);
  n->exponent = e;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::Add, a, &b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::Sub, a, &b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::Mul, a, &b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::Div, a, &b); }
Expr Expr::operator-() const { return make(Kind::Neg, *this, nullptr); }
Expr Expr::pow(int e) const { return make(Kind::Pow, *this, nullptr, e); }

Expr Expr::substitute(const std::map<Var, Expr>& s) const {
  switch (kind()) {
    case Kind::Const:
      return *this;
    case Kind::Variable: {
      auto it = s.find(variable());
      return it == s.end() ? *this : it->second;
    }
    case Kind::Neg:
      return -lhs().substitute(s);
    case Kind::Pow:
      return lhs().substitute(s).pow(exponent());
    default: {
      Expr r = rhs().substitute(s);
      return make(kind(), lhs().substitute(s), &r);
    }
  }
}

std::uint16_t Expr::variables() const {
  switch (kind()) {
    case Kind::Const:
      return 0;
    case Kind::Variable:
      return static_cast<std::uint16_t>(1u << static_cast<int>(variable()));
    case Kind::Neg:
    case Kind::Pow:
      return lhs().variables();
    default:
      return lhs().variables() | rhs().variables();
  }
}

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string render(const Expr& e, bool latex) {
  auto wrap = [&](const Expr& c, int p) {
    std::string s = render(c, latex);
    int cp = precedence(c.kind());
    if (c.kind() == Expr::Kind::Const && (c.value().is_negative() || c.value().is_compound() ||
                                          (c.value().is_rational() && c.value().rational().get_den() != 1)))
      cp = 1;
    if (cp < p) return latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
    return s;
  };
  switch (e.kind()) {
    case Expr::Kind::Const:
      return latex ? e.value().to_latex() : e.value().to_string();
    case Expr::Kind::Variable:
      return latex ? var_latex(e.variable()) : var_name(e.variable());
    case Expr::Kind::Add:
      return wrap(e.lhs(), 1) + " + " + wrap(e.rhs(), 1);
    case Expr::Kind::Sub:
      return wrap(e.lhs(), 1) + " - " + wrap(e.rhs(), 2);
    case Expr::Kind::Mul:
      return wrap(e.lhs(), 2) + (latex ? " " : "*") + wrap(e.rhs(), 3);
    case Expr::Kind::Div:
      if (latex) return "\\frac{" + render(e.lhs(), true) + "}{" + render(e.rhs(), true) + "}";
      return wrap(e.lhs(), 2) + "/" + wrap(e.rhs(), 3);
    case Expr::Kind::Neg:
      return "-" + wrap(e.lhs(), 3);
    case Expr::Kind::Pow:
      return wrap(e.lhs(), 5) + (latex ? "^{" + std::to_string(e.exponent()) + "}" : "^" + std::to_string(e.exponent()));
  }
  return "?";
}

}  // namespace

std::string Expr::to_string() const { return render(*this, false); }
std::string Expr::to_latex() const { return render(*this, true); }

RatFn to_ratfn(const Expr& e) {
  return e.evaluate<RatFn>([](Var v) { return RatFn::var(v); });
}

MultiPoly to_poly(const Expr& e) {
  RatFn r = to_ratfn(e);
  if (!r.is_polynomial()) throw AlgebraError("expression is not a polynomial: " + e.to_string());
  return r.num().scaled(r.den().constant_value().inverse());
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const NumberField* f, const std::map<std::string, Expr>& names)
      : s_(s), field_(f), names_(names) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Expr expr() {
    Expr e = term();
    while (true) {
      if (eat('+')) e = e + term();
      else if (eat('-')) e = e - term();
      else return e;
    }
  }
  Expr term() {
    Expr e = unary();
    while (true) {
      if (eat('*')) e = e * unary();
      else if (eat('/')) e = e / unary();
      else return e;
    }
  }
  Expr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Expr power() {
    Expr base = atom();
    if (eat('^')) {
      bool paren = eat('(');
      bool neg = eat('-');
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (paren && !eat(')')) fail("expected ')'");
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      Expr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Expr(FieldElement(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (id == "sqrt") {
        if (!eat('(')) fail("expected '(' after sqrt");
        skip();
        size_t a = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string d(s_.substr(a, pos_ - a));
        if (!eat(')')) fail("expected ')'");
        id = "sqrt(" + d + ")";
      }
      auto it = names_.find(id);
      if (it != names_.end()) return it->second;
      if (field_ && id == field_->generator()) return Expr(FieldElement::generator(field_));
      if (field_ && field_->generator() == "omega" && id == "w") return Expr(FieldElement::generator(field_));
      if (auto v = parse_var(id)) return Expr::var(*v);
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
  const NumberField* field_;
  const std::map<std::string, Expr>& names_;
};

}  // namespace

Expr parse_expr(std::string_view text, const NumberField* field, const std::map<std::string, Expr>& names) {
  return Parser(text, field, names).parse();
}

}  // namespace kumfib
