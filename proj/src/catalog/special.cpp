#include "kumfib/catalog/special.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kumfib {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

const std::map<std::string, Expr>& curve_names() {
  static const std::map<std::string, Expr> names = {
      {"x", Expr::var(Var::X)}, {"y", Expr::var(Var::Y)}, {"v", Expr::var(Var::U)}};
  return names;
}

Expr parse_special(const std::string& text, const std::string& field) {
  return parse_expr(text, NumberField::parse(field), curve_names());
}

std::map<std::string, int> lattice_multiset(const FiberMultiset& m) {
  std::map<std::string, int> out;
  for (auto& [t, n] : m)
    if (!t.root_lattice().empty()) out[t.root_lattice()] += n;
  return out;
}

int euler(const FiberMultiset& m) {
  int e = 0;
  for (auto& [t, n] : m) e += n * t.euler();
  return e;
}

}  // namespace

const SpecialEquation& SpecialFixtures::at(const std::string& label) const {
  for (auto& e : equations)
    if (e.label == label) return e;
  throw FixtureError("no equation " + label);
}

std::string default_fixtures_path() {
  if (const char* p = std::getenv("KUMFIB_FIXTURES"); p && *p) return p;
  return std::string(KUMFIB_SOURCE_DIR) + "/fixtures/special.txt";
}

SpecialFixtures parse_special_fixtures(const std::string& text) {
  SpecialFixtures fx;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  SpecialEquation* cur = nullptr;
  auto fail = [&](const std::string& msg) { throw FixtureError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest = trim(line.substr(key.size()));
    bool indented = raw[0] == ' ' || raw[0] == '\t';
    if (!indented) {
      if (key == "equation") {
        if (rest.empty()) fail("missing label");
        fx.equations.push_back({});
        cur = &fx.equations.back();
        cur->label = rest;
        cur->line = lineno;
      } else if (key == "pair") {
        SpecialPair p;
        std::string extra;
        if (!(ls >> p.type >> p.first >> p.second) || (ls >> extra)) fail("pair needs <type> <label> <label>");
        fx.pairs.push_back(p);
        cur = nullptr;
      } else {
        fail("unknown record '" + key + "'");
      }
      continue;
    }
    if (!cur) fail("field outside an equation record");
    if (key == "type") {
      cur->type = rest;
    } else if (key == "field") {
      cur->field = rest;
    } else if (key == "curve") {
      cur->curve = rest;
    } else if (key == "J") {
      cur->j = rest;
    } else if (key == "lambda") {
      std::string a, b, extra;
      if (!(ls >> a >> b) || (ls >> extra)) fail("lambda needs two values");
      cur->lambda = std::make_pair(a, b);
    } else {
      fail("unknown field '" + key + "'");
    }
  }
  for (auto& e : fx.equations) {
    lineno = e.line;
    if (e.type.empty() || e.curve.empty()) fail("equation " + e.label + " needs type and curve");
    catalog_entry(e.type);
    try {
      NumberField::parse(e.field);
      special_model(e);
      if (e.j) parse_special(*e.j, e.field);
    } catch (const std::exception& err) {
      fail("equation " + e.label + ": " + err.what());
    }
  }
  for (auto& p : fx.pairs) {
    fx.at(p.first);
    fx.at(p.second);
  }
  return fx;
}

SpecialFixtures load_special_fixtures(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FixtureError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_special_fixtures(ss.str());
}

WeierstrassModel special_model(const SpecialEquation& e) {
  auto eq = e.curve.find('=');
  if (eq == std::string::npos) throw FixtureError("curve without '='");
  Expr lhs = parse_special(e.curve.substr(0, eq), e.field), rhs = parse_special(e.curve.substr(eq + 1), e.field);
  return WeierstrassModel::from_equation(to_ratfn(lhs - rhs));
}

bool same_reducible_fibers(const FiberMultiset& a, const FiberMultiset& b) {
  return lattice_multiset(a) == lattice_multiset(b) && euler(a) == 24 && euler(b) == 24;
}

bool SpecialRecord::ok() const {
  return (!j_given || j_match) && fibers_match && (!lambda_check || lambda_check->pass);
}

bool SpecialReport::ok() const {
  for (auto& r : equations)
    if (!r.ok()) return false;
  for (auto& p : pairs)
    if (!p.confirmed) return false;
  return true;
}

std::vector<FieldElement> legendre_values_c1() { return {FieldElement(-1), FieldElement(2), Rational(1, 2)}; }

std::vector<FieldElement> legendre_values_c2() {
  FieldElement w = FieldElement::generator(NumberField::omega());
  return {-w, -(w * w)};
}

namespace {

Check lambda_check(const SpecialEquation& e, const WeierstrassModel& w) {
  const NumberField* f = NumberField::parse(e.field);
  Bindings b = {{Var::L1, parse_lambda(e.lambda->first, f)}, {Var::L2, parse_lambda(e.lambda->second, f)}};
  Check c{"stated Legendre parameters", false, ""};
  auto built = construct(e.type, b, true);
  auto iso = iso_test(built.model, w, IsoFamily::Auto);
  c.pass = iso.isomorphic;
  c.detail = "l1 = " + e.lambda->first + ", l2 = " + e.lambda->second + ": " +
             (iso.isomorphic ? iso.witness : iso.reason);
  return c;
}

}  // namespace

std::optional<std::string> find_assignment(const SpecialEquation& e) {
  WeierstrassModel w = special_model(e);
  auto c1 = legendre_values_c1(), c2 = legendre_values_c2();
  for (int order = 0; order < 2; ++order)
    for (auto& a : c1)
      for (auto& b : c2) {
        Bindings lam = order == 0 ? Bindings{{Var::L1, a}, {Var::L2, b}} : Bindings{{Var::L1, b}, {Var::L2, a}};
        auto built = construct(e.type, lam, true);
        auto iso = iso_test(built.model, w, IsoFamily::Auto);
        if (iso.isomorphic)
          return "l1 = " + lam.at(Var::L1).to_string() + ", l2 = " + lam.at(Var::L2).to_string() + ": " + iso.witness;
      }
  return std::nullopt;
}

SpecialReport special_case_suite(const SpecialFixtures& fx) {
  SpecialReport rep;
  std::map<std::string, WeierstrassModel> models;
  for (auto& e : fx.equations) {
    SpecialRecord r;
    r.label = e.label;
    r.type = e.type;
    r.field = e.field;
    WeierstrassModel w = special_model(e);
    models.emplace(e.label, w);
    r.j = w.j_invariant();
    if (e.j) {
      r.j_given = true;
      r.j_match = r.j == to_ratfn(parse_special(*e.j, e.field));
    }
    auto cfg = fiber_configuration(w);
    FiberMultiset expected = parse_fiber_summary(catalog_entry(e.type).fibers);
    r.fibers = cfg.summary();
    r.expected_fibers = fiber_summary(expected);
    r.fibers_exact = cfg.multiset() == expected;
    r.fibers_match = r.fibers_exact || same_reducible_fibers(cfg.multiset(), expected);
    if (e.lambda) r.lambda_check = lambda_check(e, w);
    rep.equations.push_back(r);
  }
  for (auto& p : fx.pairs) {
    PairRecord pr;
    pr.pair = p;
    pr.iso = iso_test(models.at(p.first), models.at(p.second), IsoFamily::Auto);
    pr.confirmed = pr.iso.exhaustive && !pr.iso.isomorphic;
    rep.pairs.push_back(pr);
  }
  return rep;
}

}  // namespace kumfib
