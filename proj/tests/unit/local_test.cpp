#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "kumfib/catalog/catalog.hpp"
#include "kumfib/local/fibers.hpp"
#include "kumfib/weierstrass/iso.hpp"

using namespace kumfib;
using kumfib::test::P;
using kumfib::test::R;

namespace {

// Tate's algorithm at u = 0 for y^2 = x^3 + a2 x^2 + a4 x + a6 with a_i in Q[u],
// independent of the library: only translations of x and divisibility tests.
using Poly = std::vector<Rational>;

Poly trimmed(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}
Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trimmed(r);
}
Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trimmed(r);
}
Poly scal(Rational c, const Poly& a) { return mul({c}, a); }
int ord(const Poly& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return static_cast<int>(i);
  return 1 << 20;
}
Rational coef(const Poly& a, int k) { return k < static_cast<int>(a.size()) ? a[k] : Rational(0); }
Poly shift_down(const Poly& a, int k) { return ord(a) >= k && !a.empty() ? Poly(a.begin() + k, a.end()) : Poly{}; }

struct Curve {
  Poly a2, a4, a6;
  void translate(const Poly& r) {
    Poly r2 = mul(r, r);
    Poly n6 = add(add(a6, mul(r, a4)), add(mul(r2, a2), mul(r2, r)));
    Poly n4 = add(add(a4, scal(2, mul(r, a2))), scal(3, r2));
    a2 = add(a2, scal(3, r));
    a4 = n4;
    a6 = n6;
  }
  Poly disc() const {
    // -16 (4 a2^3 a6 - a2^2 a4^2 - 18 a2 a4 a6 + 4 a4^3 + 27 a6^2)
    Poly t = add(add(scal(4, mul(mul(mul(a2, a2), a2), a6)), scal(-1, mul(mul(a2, a2), mul(a4, a4)))),
                 add(scal(-18, mul(mul(a2, a4), a6)), add(scal(4, mul(mul(a4, a4), a4)), scal(27, mul(a6, a6)))));
    return scal(-16, t);
  }
};

// repeated root of a monic cubic with zero discriminant
Rational multiple_root(Rational b, Rational c, Rational d) {
  Rational den = b * b - 3 * c;
  if (den == 0) return -b / 3;
  return (9 * d - b * c) / (2 * den);
}

std::string tate(Curve e) {
  for (;;) {
    if (ord(e.disc()) == 0) return "I0";
    e.translate({multiple_root(coef(e.a2, 0), coef(e.a4, 0), coef(e.a6, 0))});
    if (coef(e.a2, 0) != 0) return "I" + std::to_string(ord(e.disc()));
    if (ord(e.a6) < 2) return "II";
    Poly b8 = add(scal(4, mul(e.a2, e.a6)), scal(-1, mul(e.a4, e.a4)));
    if (ord(b8) < 3) return "III";
    if (ord(e.a6) < 3) return "IV";
    Rational b = coef(e.a2, 1), c = coef(e.a4, 2), d = coef(e.a6, 3);
    Rational dp = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
    if (dp != 0) return "I0*";
    if (b * b - 3 * c != 0) {
      e.translate({0, multiple_root(b, c, d)});
      for (int n = 1;; ++n) {
        if (n % 2 == 1) {
          if (coef(e.a6, n + 3) != 0) return "I" + std::to_string(n) + "*";
        } else {
          Rational qa = coef(e.a2, 1), qb = coef(e.a4, n / 2 + 2), qc = coef(e.a6, n + 3);
          if (qb * qb - 4 * qa * qc != 0) return "I" + std::to_string(n) + "*";
          Poly r(n / 2 + 2);
          r[n / 2 + 1] = -qb / (2 * qa);
          e.translate(r);
        }
      }
    }
    e.translate({0, -b / 3});
    if (coef(e.a6, 4) != 0) return "IV*";
    if (ord(e.a4) < 4) return "III*";
    if (ord(e.a6) < 6) return "II*";
    e.a2 = shift_down(e.a2, 2);
    e.a4 = shift_down(e.a4, 4);
    e.a6 = shift_down(e.a6, 6);
  }
}

Poly random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4), e(0, 7), z(0, 5);
  if (z(rng) == 0) return {};
  Poly p(e(rng), Rational(0));
  for (int i = 0; i < 3; ++i) p.push_back(c(rng));
  if (p[p.size() - 3] == 0) p[p.size() - 3] = 1;
  return trimmed(p);
}

RatFn to_ratfn(const Poly& p) {
  RatFn r, u = R("u");
  for (size_t i = 0; i < p.size(); ++i) r = r + RatFn(FieldElement(p[i])) * u.pow(static_cast<long>(i));
  return r;
}

}  // namespace

TEST_CASE("classification table") {
  CHECK(classify_kodaira(0, 0, 8) == KodairaType::I(8));
  CHECK(classify_kodaira(2, 3, 6) == KodairaType::Istar(0));
  CHECK(classify_kodaira(4, 5, 10) == KodairaType::parse("II*"));
  CHECK(classify_kodaira(kNoOrder, 5, 10) == KodairaType::parse("II*"));
  CHECK(classify_kodaira(0, 0, 0) == KodairaType::I(0));
  for (std::string s : {"I1", "I7", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*"}) {
    auto t = KodairaType::parse(s);
    CAPTURE(s);
    CHECK(t.name() == s);
  }
  CHECK(KodairaType::parse("I3*").euler() == 9);
  CHECK(KodairaType::parse("IV*").components() == 7);
  CHECK(KodairaType::parse("II").components() == 1);
}

TEST_CASE("classification agrees with Tate's algorithm on random curves") {
  std::mt19937 rng(20240607);
  int checked = 0;
  std::set<std::string> seen;
  for (int trial = 0; trial < 400; ++trial) {
    Curve e{random_coeff(rng), random_coeff(rng), random_coeff(rng)};
    if (e.disc().empty()) continue;
    auto w = WeierstrassModel(0, to_ratfn(e.a2), 0, to_ratfn(e.a4), to_ratfn(e.a6));
    auto v = place_valuations(w, Place::finite(P("u")));
    std::string expected = tate(e);
    seen.insert(expected);
    CAPTURE(w.to_string());
    CHECK(v.data.type.name() == (expected == "I0" ? KodairaType::I(0).name() : expected));
    CHECK(v.data.type.euler() == v.data.ord_disc);
    CHECK(v.minimal.j_invariant() == w.j_invariant());
    ++checked;
  }
  CHECK(checked > 300);
  MESSAGE("types seen: " << seen.size());
  for (std::string t : {"II", "III", "IV", "I0*", "I1*", "IV*", "III*", "II*"}) CHECK(seen.count(t) == 1);
}

TEST_CASE("infinity is classified as zero after inversion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Curve e{random_coeff(rng), random_coeff(rng), random_coeff(rng)};
    if (e.disc().empty()) continue;
    auto w = WeierstrassModel(0, to_ratfn(e.a2), 0, to_ratfn(e.a4), to_ratfn(e.a6));
    auto inv = base_change(w, BaseMap::inversion());
    CAPTURE(w.to_string());
    CHECK(place_valuations(w, Place::at_infinity()).data.type ==
          place_valuations(inv, Place::finite(P("u"))).data.type);
  }
}

TEST_CASE("good reduction away from the discriminant") {
  auto w = WeierstrassModel(0, R("u"), 0, R("u^2+1"), R("u^3-2"));
  auto v = place_valuations(w, Place::finite(P("u-7")));
  CHECK(v.data.ord_disc == 0);
  CHECK(v.data.type.smooth());
}

TEST_CASE("generic configurations of the catalog") {
  Bindings g = generic_lambda();
  CHECK(fiber_configuration(entry_model(catalog_entry("J1"), g)).summary() == "2I8 + 8I1");
  CHECK(fiber_configuration(entry_model(catalog_entry("J8"), g)).summary() == "III* + I2* + 3I2 + I1");
  auto j9 = fiber_configuration(entry_model(catalog_entry("J9")));
  CHECK(j9.at(Place::finite(P("u-1"))).ord_disc == 10);
  CHECK(j9.at(Place::finite(P("u-1"))).type == KodairaType::parse("II*"));
  for (auto& e : catalog()) {
    auto cfg = fiber_configuration(entry_model(e, g));
    CAPTURE(e.tag);
    CHECK(cfg.euler_sum() == 24);
    for (auto& f : cfg.fibers()) CHECK(f.type.euler() == f.ord_disc);
  }
}

TEST_CASE("J10 discriminant degree") {
  // finite part of the minimal discriminant has degree 10: u^6 d(u) with deg d = 4
  auto cfg = fiber_configuration(entry_model(catalog_entry("J10")));
  int finite = 0;
  for (auto& f : cfg.fibers())
    if (!f.place.infinity) finite += f.ord_disc * f.count();
  CHECK(finite == 10);
  CHECK(cfg.at(Place::finite(P("u"))).ord_disc == 6);
}
