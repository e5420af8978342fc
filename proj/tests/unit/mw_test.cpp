#include <doctest.h>

#include "helpers.hpp"
#include "kumfib/catalog/catalog.hpp"

using namespace kumfib;

namespace {

struct Built {
  WeierstrassModel w;
  FiberConfiguration cfg;
  SectionTable s;
};

Built build(const std::string& tag, const Bindings& lambda = {}) {
  const auto& e = catalog_entry(tag);
  Built b{entry_model(e, lambda), {}, entry_sections(e, lambda)};
  b.cfg = fiber_configuration(b.w);
  return b;
}

}  // namespace

TEST_CASE("J1 heights") {
  auto b = build("J1");
  CHECK(height_pairing(b.w, b.cfg, b.s.at("P1"), b.s.at("P1")) == 1);
  CHECK(height_pairing(b.w, b.cfg, b.s.at("P1"), b.s.at("P2")) == 0);
  CHECK(height(b.w, b.cfg, b.s.at("T")) == 0);
  CHECK(zero_intersection(b.w, b.cfg, b.s.at("T")) == 0);
  CHECK(verify_relation(b.w, b.s, parse_relation("P3 = P2 + T")));
  CHECK_FALSE(verify_relation(b.w, b.s, parse_relation("P3 = P1 + T")));
  auto g = gram_matrix(b.w, b.cfg, b.s, {"P1", "P2"});
  CHECK(identify_lattice(g) == "Z^2");
  CHECK(torsion_structure(b.w, {b.s.at("T")}) == "Z/2");
}

TEST_CASE("J2 Gram matrix is A2*[2]") {
  auto b = build("J2");
  auto g = gram_matrix(b.w, b.cfg, b.s, catalog_entry("J2").basis);
  Matrix expected = {{Rational(4, 3), Rational(2, 3)}, {Rational(2, 3), Rational(4, 3)}};
  CHECK(g.entries == expected);
  CHECK(identify_lattice(g) == "A2*[2]");
}

TEST_CASE("J3 heights and relations") {
  auto b = build("J3");
  CHECK(height_pairing(b.w, b.cfg, b.s.at("P4"), b.s.at("P4")) == Rational(4, 3));
  CHECK(height_pairing(b.w, b.cfg, b.s.at("P4"), b.s.at("P8")) == Rational(2, 3));
  CHECK(verify_relation(b.w, b.s, parse_relation("P1 = P5 + P8")));
  auto g = gram_matrix(b.w, b.cfg, b.s, catalog_entry("J3").basis);
  CHECK(g.symmetric());
  CHECK(g.positive_definite());
  CHECK(identify_lattice(g) == "(A2*[2])^2");
}

TEST_CASE("height pairing is symmetric and bilinear on catalog sections") {
  for (std::string tag : {"J1", "J2", "J3"}) {
    auto b = build(tag, generic_lambda());
    std::vector<Point> pts;
    for (auto& [n, p] : b.s) pts.push_back(p);
    CAPTURE(tag);
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = 0; j < pts.size(); ++j) {
        if (i == j) continue;
        auto pq = height_pairing(b.w, b.cfg, pts[i], pts[j]);
        CHECK(pq == height_pairing(b.w, b.cfg, pts[j], pts[i]));
        for (size_t k = 0; k < pts.size(); ++k) {
          Point sum = add(b.w, pts[i], pts[j]);
          if (sum.infinity || sum == pts[k]) continue;
          CHECK(height_pairing(b.w, b.cfg, sum, pts[k]) ==
                height_pairing(b.w, b.cfg, pts[i], pts[k]) + height_pairing(b.w, b.cfg, pts[j], pts[k]));
        }
      }
  }
}

TEST_CASE("torsion sections have height zero") {
  for (auto& e : catalog()) {
    if (e.torsion_sections.empty()) continue;
    auto b = build(e.tag, generic_lambda());
    for (auto& n : e.torsion_sections) {
      CAPTURE(e.tag);
      CAPTURE(n);
      CHECK(height(b.w, b.cfg, b.s.at(n)) == 0);
      CHECK(torsion_order(b.w, b.s.at(n)) > 0);
    }
  }
}

TEST_CASE("Shioda-Tate and Neron-Severi discriminant") {
  for (auto& e : catalog()) {
    auto b = build(e.tag, generic_lambda());
    CAPTURE(e.tag);
    CHECK(shioda_tate_rank(b.cfg, 18) == static_cast<int>(e.basis.size()));
    Rational det = e.basis.empty() ? Rational(1) : gram_matrix(b.w, b.cfg, b.s, e.basis).det();
    CHECK(abs(ns_discriminant(b.cfg, det, torsion_group_order(e.torsion))) == 16);
  }
}

TEST_CASE("lattice names") {
  CHECK(identify_lattice(GramMatrix{{"P"}, {{Rational(3)}}}).empty());
  CHECK(torsion_group_order("(Z/2)^2") == 4);
  CHECK(torsion_group_order("0") == 1);
  CHECK(standard_gram("A2*[2]").size() == 2);
}
