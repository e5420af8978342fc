#include <doctest.h>

#include "kumfib/ns/configuration.hpp"

using namespace kumfib;

namespace {

KodairaType K(const std::string& s) { return KodairaType::parse(s); }
KodairaType classify(const std::string& s) { return classify_divisor(Divisor::parse(s)); }

}  // namespace

TEST_CASE("basic pairings") {
  CHECK(Divisor::parse("A00") * Divisor::parse("A11 + A22 + B33") == 2);
  CHECK(Divisor::parse("F0") * Divisor::parse("G0") == 0);
  CHECK(intersect(curve("A12"), curve("F1")) == 1);
  CHECK(intersect(curve("A12"), curve("G2")) == 1);
  CHECK(intersect(curve("A12"), curve("G1")) == 0);
  for (auto& c : model_curves()) CHECK(intersect(c, c) == -2);
  CHECK(model_curves().size() == 24 + 96 + 2);
  CHECK_THROWS_AS(curve("A04"), ConfigurationError);
  CHECK_THROWS_AS(curve("E0"), ConfigurationError);
}

TEST_CASE("pullback curve incidences") {
  CHECK(intersect(curve("B33"), curve("B12")) == 2);
  CHECK(intersect(curve("B33"), curve("B32")) == 0);
  CHECK(intersect(curve("B33"), curve("P33")) == 0);
  CHECK(intersect(curve("P33"), curve("P32")) == 0);
  CHECK(intersect(curve("B33"), curve("F3")) == 1);
  CHECK(intersect(curve("B33"), curve("G3")) == 1);
  CHECK(intersect(curve("B33"), curve("F0")) == 0);
  CHECK(intersect(curve("B33"), curve("A11")) == 2);
  CHECK(intersect(curve("P33"), curve("A00")) == 4);
  CHECK(intersect(curve("P33"), curve("G3")) == 1);
  CHECK(intersect(curve("P32"), curve("G2")) == 1);
  CHECK(curve("B32").name == "B32");
  CHECK(Divisor::parse("L(11,00,23)").terms().count("L(00,11,23)") == 1);
}

TEST_CASE("Kummer and Inose pencils") {
  for (int i = 0; i < 4; ++i) {
    std::string s = std::to_string(i);
    CHECK(classify("2F" + s + " + A" + s + "0 + A" + s + "1 + A" + s + "2 + A" + s + "3") == K("I0*"));
  }
  Divisor psi1 = Divisor::parse("G1 + G2 + G3 + 2A01 + 2A02 + 2A03 + 3F0");
  Divisor psi2 = Divisor::parse("F1 + F2 + F3 + 2A10 + 2A20 + 2A30 + 3G0");
  CHECK(psi1 * psi1 == 0);
  CHECK(classify_divisor(psi1) == K("IV*"));
  CHECK(classify_divisor(psi2) == K("IV*"));
  CHECK(fiber_pair_check(psi1, psi2).ok());
  Divisor phi1 = Divisor::parse("2F1 + A10 + A11 + A12 + A13");
  Divisor phi2 = Divisor::parse("2F2 + A20 + A21 + A22 + A23");
  CHECK(fiber_pair_check(phi1, phi2).ok());
  CHECK_FALSE(fiber_pair_check(phi1, psi2).ok());
}

TEST_CASE("printed fiber divisors") {
  struct Case {
    const char* divisor;
    const char* type;
  };
  const Case cases[] = {
      {"F3 + A33 + G3 + B33", "I4"},
      {"F0 + A02 + G2 + A12 + F1 + A10 + G0 + A20 + F2 + A21 + G1 + A01", "I12"},
      {"2G3 + A03 + A13 + A33 + B33", "I0*"},
      {"2G2 + A02 + A12 + A32 + B32", "I0*"},
      {"A01 + A31 + 2G1 + 2A21 + 2F2 + 2A20 + 2G0 + A10 + A30", "I4*"},
      {"A01 + A02 + 2F0 + 2A03 + 2G3 + A33 + B33", "I2*"},
      {"A12 + 2F1 + 3A10 + 4G0 + 3A20 + 2F2 + A21 + 2A30", "III*"},
      {"A31 + A21 + 2G1 + 2A01 + 2F0 + 2A03 + 2G3 + A33 + B33", "I4*"},
      {"A30 + A20 + 2G0 + 2A10 + 2F1 + 2A12 + 2G2 + A32 + B32", "I4*"},
      {"2F0 + A02 + A03 + 2A01 + 2G1 + 2A21 + 2F2 + 2A20 + 2G0 + A10 + A30", "I6*"},
      {"2G3 + A03 + A33 + B33 + P33", "I0*"},
      {"2G2 + A02 + A32 + B32 + P32", "I0*"},
      {"A01 + 2G1 + 3A21 + 4F2 + 5A20 + 6G0 + 3A30 + 4A10 + 2F1", "II*"},
      {"2G3 + A13 + A33 + B33 + P33", "I0*"},
      {"B32 + A32 + 2G2 + 2A02 + 2F0 + 2A01 + 2G1 + 2A21 + 2F2 + 2A20 + 2G0 + A10 + A30", "I8*"},
      {"F0 + F1 + G2 + G3 + A02 + A03 + A12 + A13", "I8"},
      {"G0 + G1 + F2 + F3 + A20 + A21 + A30 + A31", "I8"},
      {"2F1 + 2A10 + 2G0 + A12 + A13 + A20 + A30", "I2*"},
      {"2F0 + 2A01 + 2G1 + A02 + A03 + A21 + A31", "I2*"},
      {"B33 + B12", "I2"},
      {"B32 + B13", "I2"},
  };
  for (auto& c : cases) {
    std::string text = c.divisor;
    CAPTURE(text);
    Divisor d = Divisor::parse(c.divisor);
    CHECK(classify_divisor(d) == K(c.type));
    CHECK(d * d == 0);
    for (auto& m : model_curves()) CHECK(d.dot(m) >= 0);
  }
}

TEST_CASE("printed divisor pairs are fibers of one pencil") {
  const std::pair<const char*, const char*> pairs[] = {
      {"F0 + F1 + G2 + G3 + A02 + A03 + A12 + A13", "G0 + G1 + F2 + F3 + A20 + A21 + A30 + A31"},
      {"2F1 + 2A10 + 2G0 + A12 + A13 + A20 + A30", "2F0 + 2A01 + 2G1 + A02 + A03 + A21 + A31"},
      {"F3 + A33 + G3 + B33", "F0 + A02 + G2 + A12 + F1 + A10 + G0 + A20 + F2 + A21 + G1 + A01"},
      {"2G3 + A03 + A13 + A33 + B33", "2G2 + A02 + A12 + A32 + B32"},
      {"A01 + A31 + 2G1 + 2A21 + 2F2 + 2A20 + 2G0 + A10 + A30", "2G2 + A02 + A12 + A32 + B32"},
      {"A01 + A02 + 2F0 + 2A03 + 2G3 + A33 + B33", "A12 + 2F1 + 3A10 + 4G0 + 3A20 + 2F2 + A21 + 2A30"},
      {"A31 + A21 + 2G1 + 2A01 + 2F0 + 2A03 + 2G3 + A33 + B33",
       "A30 + A20 + 2G0 + 2A10 + 2F1 + 2A12 + 2G2 + A32 + B32"},
      {"2F0 + A02 + A03 + 2A01 + 2G1 + 2A21 + 2F2 + 2A20 + 2G0 + A10 + A30", "B32 + B13"},
      {"B33 + B12", "B32 + B13"},
      {"2G3 + A03 + A33 + B33 + P33", "2G2 + A02 + A32 + B32 + P32"},
      {"A01 + 2G1 + 3A21 + 4F2 + 5A20 + 6G0 + 3A30 + 4A10 + 2F1", "2G2 + A02 + A32 + B32 + P32"},
      {"2G3 + A13 + A33 + B33 + P33",
       "B32 + A32 + 2G2 + 2A02 + 2F0 + 2A01 + 2G1 + 2A21 + 2F2 + 2A20 + 2G0 + A10 + A30"},
  };
  for (auto& [a, b] : pairs) {
    std::string first = a, second = b;
    CAPTURE(first);
    CAPTURE(second);
    auto r = fiber_pair_check(Divisor::parse(a), Divisor::parse(b));
    CHECK(r.ok());
  }
}

TEST_CASE("non-fibers are rejected") {
  CHECK_THROWS_AS(classify("F0 + A01"), ConfigurationError);
  CHECK_THROWS_AS(classify("2F0 + A01 + A02 + A03"), ConfigurationError);
  CHECK_THROWS_AS(classify("4F1 + 2A10 + 2A11 + 2A12 + 2A13"), ConfigurationError);
  CHECK_THROWS_AS(classify("A12 + 2F1 + 3A10 + 4E0 + 3A20 + 2F2 + A21 + 2A30"), ConfigurationError);
}

TEST_CASE("genus of pulled back (1,1)-curves") {
  CHECK(genus_pullback({{0, 0}, {1, 1}, {2, 2}}) == 0);
  CHECK(genus_pullback({{0, 0}, {1, 1}}) == 1);
  CHECK_THROWS_AS(genus_pullback({{0, 0}, {0, 1}}), ConfigurationError);
  int three = 0, two = 0;
  std::vector<RPoint> pts;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) pts.push_back({i, j});
  for (size_t x = 0; x < 16; ++x)
    for (size_t y = x + 1; y < 16; ++y) {
      if (pts[x].i == pts[y].i || pts[x].j == pts[y].j) continue;
      CHECK(genus_pullback({pts[x], pts[y]}) == 1);
      ++two;
      for (size_t z = y + 1; z < 16; ++z) {
        if (pts[z].i == pts[x].i || pts[z].j == pts[x].j || pts[z].i == pts[y].i || pts[z].j == pts[y].j) continue;
        CHECK(genus_pullback({pts[x], pts[y], pts[z]}) == 0);
        ++three;
      }
    }
  CHECK(three == 96);
  CHECK(two == 72);
}
