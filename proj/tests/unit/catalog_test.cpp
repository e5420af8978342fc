#include <doctest.h>

#include "helpers.hpp"
#include "kumfib/catalog/catalog.hpp"
#include "kumfib/catalog/special.hpp"

using namespace kumfib;

namespace {

std::string failures(const std::vector<Check>& checks) {
  std::string s;
  for (auto& c : checks)
    if (!c.pass) s += c.name + ": " + c.detail.substr(0, 200) + "\n";
  return s;
}

}  // namespace

TEST_CASE("catalog has the eleven types") {
  CHECK(catalog().size() == 11);
  CHECK(catalog_entry("J7").fibers == "I4* + 2I0* + 2I1");
  CHECK_THROWS_AS(catalog_entry("J12"), std::invalid_argument);
}

TEST_CASE("every entry verifies at symbolic parameters") {
  for (auto& e : catalog()) {
    auto r = verify_entry(e.tag);
    CAPTURE(e.tag);
    INFO(failures(r.checks));
    CHECK(r.ok());
    CHECK(r.data.fibers.summary() == fiber_summary(parse_fiber_summary(e.fibers)));
  }
}

TEST_CASE("printed J10 equation is rejected") {
  const auto& e = catalog_entry("J10");
  REQUIRE(e.printed_model);
  auto c = substitution_check(e);
  CHECK(c.pass);
  auto printed = e;
  printed.model = *e.printed_model;
  CHECK_FALSE(substitution_check(printed).pass);
}

TEST_CASE("parameter shapes") {
  for (auto& e : catalog()) {
    CAPTURE(e.tag);
    CHECK(parameter_shape_check(e).pass);
    CHECK(e.parameter_has_t == (e.tag == "J1" || e.tag == "J2" || e.tag == "J3"));
  }
}

TEST_CASE("generic parameters avoid every listed locus") {
  CHECK_FALSE(generic_precheck(generic_lambda()));
  for (auto& e : catalog()) CHECK_FALSE(matching_degeneracy(e, generic_lambda()));
  Bindings bad = {{Var::L1, FieldElement(3)}, {Var::L2, FieldElement(-3)}};
  CHECK(generic_precheck(bad));
  CHECK_THROWS_AS(construct("J8", bad), DegeneracyError);
  CHECK_THROWS_AS(construct("J1", {{Var::L1, FieldElement(1)}, {Var::L2, FieldElement(5)}}), std::invalid_argument);
}

TEST_CASE("construct at generic parameters") {
  for (auto& e : catalog()) {
    auto d = construct(e.tag, generic_lambda());
    CAPTURE(e.tag);
    INFO(failures(d.checks));
    CHECK(d.ok());
    CHECK(d.lattice == e.mwl);
    CHECK(d.torsion == e.torsion);
  }
}

TEST_CASE("degenerations") {
  auto j1 = construct("J1", {{Var::L1, FieldElement(3)}, {Var::L2, FieldElement(3)}}, true);
  CHECK(j1.fibers.multiset().at(KodairaType::I(2)) == 2);
  auto j8 = construct("J8", {{Var::L1, FieldElement(3)}, {Var::L2, FieldElement(-3)}}, true);
  CHECK(j8.fibers.multiset().count(KodairaType::parse("III")) == 1);
  for (auto& e : catalog())
    for (auto& n : e.degeneracies) {
      auto r = degeneracy_check(e.tag, n);
      CAPTURE(e.tag);
      CAPTURE(n.text);
      CAPTURE(r.observed);
      CHECK(r.matches);
    }
}

TEST_CASE("J11 degenerations over quadratic fields") {
  auto q5 = NumberField::parse("Q(sqrt(5))");
  Bindings b = {{Var::L1, FieldElement(-1)}, {Var::L2, parse_lambda("9+4*sqrt(5)", q5)}};
  auto cfg = construct("J11", b, true).fibers;
  CHECK(cfg.summary() == "2I4* + II + 2I1");
  auto qi = NumberField::parse("Q(i)");
  Bindings c = {{Var::L1, FieldElement(-1)}, {Var::L2, parse_lambda("i", qi)}};
  CHECK(construct("J11", c, true).fibers.summary() == "2I4* + 2II");
}

TEST_CASE("fiber divisors") {
  for (auto& e : catalog()) {
    CAPTURE(e.tag);
    CHECK(failures(divisor_checks(e)) == "");
  }
}

TEST_CASE("special equations") {
  auto fx = load_special_fixtures();
  REQUIRE(fx.equations.size() == 16);
  auto rep = special_case_suite(fx);
  for (auto& r : rep.equations) {
    CAPTURE(r.label);
    CAPTURE(r.fibers);
    CHECK(r.ok());
    if (r.j_given) CHECK(r.j_match);
  }
  CHECK(rep.pairs.size() == 5);
  for (auto& p : rep.pairs) {
    CAPTURE(p.pair.type);
    CAPTURE(p.iso.reason);
    CHECK(p.confirmed);
  }
  auto j7 = std::find_if(rep.pairs.begin(), rep.pairs.end(), [](auto& p) { return p.pair.type == "J7"; });
  REQUIRE(j7 != rep.pairs.end());
  CHECK(j7->iso.j_match);
  CHECK(rep.ok());
}

TEST_CASE("fixture syntax errors") {
  CHECK_THROWS_AS(parse_special_fixtures("equation 1\n  colour red\n"), FixtureError);
  CHECK_THROWS_AS(parse_special_fixtures("equation 1\n  type J1\n"), FixtureError);
  CHECK_THROWS_AS(parse_special_fixtures("  type J1\n"), FixtureError);
  CHECK_THROWS_AS(parse_special_fixtures("equation 1\n  type J1\n  curve y^2 = x^3 + (u\n"), FixtureError);
  CHECK_THROWS_AS(load_special_fixtures("/nonexistent/special.txt"), FixtureError);
  auto fx = parse_special_fixtures("equation a\n  type J4\n  curve y^2 = x^3 - x  # comment\n  J 1\n");
  CHECK(fx.equations.size() == 1);
  CHECK(same_reducible_fibers(parse_fiber_summary("2IV* + 4II"), parse_fiber_summary("2IV* + 8I1")));
  CHECK_FALSE(same_reducible_fibers(parse_fiber_summary("I2 + II + 2I1 + 2I4*"), parse_fiber_summary("2I4* + 4I1")));
}
