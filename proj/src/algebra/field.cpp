#include "kumfib/algebra/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <regex>

namespace kumfib {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// r = a mod b, q = a div b (dense, low-to-high, over Q)
void dense_divrem(const Dense& a, const Dense& b, Dense& q, Dense& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (r.size() >= b.size() && !r.empty()) {
    size_t shift = r.size() - b.size();
    Rational f = r.back() / b.back();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    trim(r);
  }
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Dense dense_sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

bool has_rational_root(const Dense& m) {
  // clear denominators, then rational root theorem
  Integer l = 1;
  for (auto& c : m) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> z;
  for (auto& c : m) z.push_back(Integer(c * l));
  if (sgn(z[0]) == 0) return true;
  auto divisors = [](Integer n) {
    n = abs(n);
    std::vector<Integer> d;
    for (Integer i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        d.push_back(i);
        if (i * i != n) d.push_back(n / i);
      }
    return d;
  };
  for (auto& p : divisors(z[0]))
    for (auto& q : divisors(z.back()))
      for (int s : {1, -1}) {
        Rational x(p * s, q);
        x.canonicalize();
        Rational v = 0;
        for (size_t i = z.size(); i-- > 0;) v = v * x + Rational(z[i]);
        if (sgn(v) == 0) return true;
      }
  return false;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace

NumberField::NumberField(std::vector<Rational> minpoly, std::string gen)
    : minpoly_(std::move(minpoly)), gen_(std::move(gen)) {
  int d = degree();
  powers_.resize(std::max(1, 2 * d - 1));
  for (int k = 0; k < static_cast<int>(powers_.size()); ++k) {
    Dense x(k + 1, Rational(0));
    x[k] = 1;
    Dense q, r;
    dense_divrem(x, minpoly_, q, r);
    r.resize(d, Rational(0));
    powers_[k] = r;
  }
}

const NumberField* NumberField::get(std::vector<Rational> minpoly, std::string generator) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<NumberField>> table;
  trim(minpoly);
  if (minpoly.size() < 3) throw AlgebraError("minimal polynomial must have degree >= 2");
  if (minpoly.back() != 1) throw AlgebraError("minimal polynomial must be monic");
  if (has_rational_root(minpoly)) throw AlgebraError("minimal polynomial has a rational root");
  std::string key = generator + ":";
  for (auto& c : minpoly) key += rat_str(c) + ",";
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(key);
  if (it != table.end()) return it->second.get();
  auto* f = new NumberField(std::move(minpoly), std::move(generator));
  table.emplace(key, std::unique_ptr<NumberField>(f));
  return f;
}

const NumberField* NumberField::omega() { return get({1, 1, 1}, "omega"); }

const NumberField* NumberField::sqrt(long d) {
  Rational r;
  if (rational_sqrt(Rational(d), r)) throw AlgebraError("sqrt of a square does not extend Q");
  std::string g = d == -1 ? "i" : "sqrt(" + std::to_string(d) + ")";
  return get({Rational(-d), 0, 1}, g);
}

const NumberField* NumberField::parse(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q" || s == "QQ") return nullptr;
  if (s == "Q(omega)" || s == "Q(w)" || s == "Q(zeta3)") return omega();
  if (s == "Q(i)") return sqrt(-1);
  static const std::regex re(R"(Q\(sqrt\((-?\d+)\)\))");
  std::smatch m;
  if (std::regex_match(s, m, re)) return sqrt(std::stol(m[1]));
  throw AlgebraError("unknown field '" + spec + "'");
}

std::string NumberField::name() const { return "Q(" + gen_ + ")"; }

const NumberField* join_fields(const NumberField* a, const NumberField* b) {
  if (a == nullptr) return b;
  if (b == nullptr || a == b) return a;
  throw AlgebraError("cannot mix elements of " + a->name() + " and " + b->name());
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  Integer n = q.get_num(), d = q.get_den();
  Integer rn = ::sqrt(n), rd = ::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

FieldElement::FieldElement(const NumberField* f, std::vector<Rational> coeffs) : field_(f) {
  if (f == nullptr) {
    q_ = coeffs.empty() ? Rational(0) : coeffs[0];
    return;
  }
  coeffs.resize(f->degree(), Rational(0));
  c_ = std::move(coeffs);
  demote();
}

FieldElement FieldElement::generator(const NumberField* f) {
  if (f == nullptr) throw AlgebraError("Q has no generator");
  std::vector<Rational> c(f->degree(), Rational(0));
  c[1] = 1;
  return FieldElement(f, c);
}

const Rational& FieldElement::rational() const {
  if (field_ != nullptr) throw AlgebraError("element is not rational: " + to_string());
  return q_;
}

std::vector<Rational> FieldElement::coefficients() const {
  if (field_ == nullptr) return {q_};
  return c_;
}

void FieldElement::demote() {
  if (field_ == nullptr) return;
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return;
  q_ = c_[0];
  c_.clear();
  field_ = nullptr;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (field_ == nullptr && o.field_ == nullptr) {
    q_ += o.q_;
    return *this;
  }
  const NumberField* f = join_fields(field_, o.field_);
  auto a = coefficients();
  auto b = o.coefficients();
  a.resize(f->degree(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  *this = FieldElement(f, std::move(a));
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (field_ == nullptr && o.field_ == nullptr) {
    q_ *= o.q_;
    return *this;
  }
  const NumberField* f = join_fields(field_, o.field_);
  auto a = coefficients();
  auto b = o.coefficients();
  std::vector<Rational> r(f->degree(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      Rational p = a[i] * b[j];
      const auto& pw = f->power(static_cast<int>(i + j));
      for (size_t k = 0; k < r.size(); ++k)
        if (sgn(pw[k]) != 0) r[k] += p * pw[k];
    }
  }
  *this = FieldElement(f, std::move(r));
  return *this;
}

void FieldElement::add_product(const FieldElement& a, const FieldElement& b) {
  if (field_ == nullptr && a.field_ == nullptr && b.field_ == nullptr) {
    mpq_t t;
    mpq_init(t);
    mpq_mul(t, a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), t);
    mpq_clear(t);
    return;
  }
  *this += a * b;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  if (field_ == nullptr) return FieldElement(Rational(1) / q_);
  // extended Euclid: s*a + t*m = 1
  Dense a = c_, m = field_->minpoly();
  trim(a);
  Dense r0 = m, r1 = a, s0{}, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    Dense q, r;
    dense_divrem(r0, r1, q, r);
    Dense s = dense_sub(s0, dense_mul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
    if (r1.empty()) throw AlgebraError("minimal polynomial is reducible");
  }
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  Dense q, rem;
  dense_divrem(s1, m, q, rem);
  return FieldElement(field_, rem);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  if (field_ == nullptr && o.field_ == nullptr) {
    if (sgn(o.q_) == 0) throw AlgebraError("division by zero");
    q_ /= o.q_;
    return *this;
  }
  return *this *= o.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.q_ = -r.q_;
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_ == nullptr) return a.q_ == b.q_;
  return a.c_ == b.c_;
}

bool FieldElement::is_compound() const {
  if (field_ == nullptr) return false;
  int n = 0;
  for (auto& c : c_)
    if (sgn(c) != 0) ++n;
  return n > 1;
}

bool FieldElement::is_negative() const {
  if (field_ == nullptr) return sgn(q_) < 0;
  if (is_compound()) return false;
  for (size_t i = c_.size(); i-- > 0;)
    if (sgn(c_[i]) != 0) return sgn(c_[i]) < 0;
  return false;
}

namespace {

std::string render(const FieldElement& x, bool latex) {
  if (x.is_rational()) {
    const Rational& q = x.rational();
    if (!latex || q.get_den() == 1) return q.get_str();
    std::string s = sgn(q) < 0 ? "-" : "";
    return s + "\\frac{" + Integer(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
  }
  const NumberField* f = x.field();
  std::string g = f->generator();
  if (latex) {
    if (g == "omega") g = "\\omega";
    else if (g.rfind("sqrt(", 0) == 0) g = "\\sqrt{" + g.substr(5, g.size() - 6) + "}";
  }
  auto c = x.coefficients();
  std::string out;
  for (size_t i = c.size(); i-- > 0;) {
    if (sgn(c[i]) == 0) continue;
    Rational a = c[i];
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    std::string term;
    std::string mono = i == 0 ? "" : (i == 1 ? g : g + "^" + std::to_string(i));
    if (i == 0) term = a.get_str();
    else if (a == 1) term = mono;
    else term = a.get_str() + (latex ? "" : "*") + mono;
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? "-" : "+") + term;
  }
  return out;
}

}  // namespace

std::string FieldElement::to_string() const { return render(*this, false); }
std::string FieldElement::to_latex() const { return render(*this, true); }

}  // namespace kumfib
