#include "kumfib/catalog/catalog.hpp"

#include <memory>

#include "kumfib/kummer/kummer.hpp"
#include "kumfib/ns/configuration.hpp"

namespace kumfib {

namespace {

Expr parse_in(const std::string& text, const std::map<std::string, Expr>& names = {},
              const NumberField* field = nullptr) {
  return parse_expr(text, field, names);
}

std::map<std::string, Expr> model_names(const CatalogEntry& e) {
  std::map<std::string, Expr> names;
  for (auto& [n, t] : e.model_aux) names[n] = parse_in(t, names);
  return names;
}

// u replaced by the elliptic parameter, then the entry's named subformulas
std::map<std::string, Expr> coordinate_names(const CatalogEntry& e) {
  std::map<std::string, Expr> names;
  names["u"] = parse_in(e.parameter);
  for (auto& [n, t] : e.aux) names[n] = parse_in(t, names);
  return names;
}

RatFn specialize(const RatFn& r, const Bindings& lambda) { return lambda.empty() ? r : r.specialize(lambda); }

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

Check identity_check(const std::string& name, const Expr& ue, const Expr& xe, const Expr& ye, const MultiPoly& target) {
  auto f = std::make_shared<const KummerField>();
  Check c{name, false, ""};
  try {
    KummerElement u = KummerElement::from_expr(ue, f), x = KummerElement::from_expr(xe, f),
                   y = KummerElement::from_expr(ye, f);
    KummerElement r = evaluate_poly(target, {{Var::U, u}, {Var::X, x}, {Var::Y, y}}, f);
    c.pass = r.is_zero();
    if (!c.pass) {
      std::string s = r.to_string();
      c.detail = "residual " + (s.size() > 300 ? s.substr(0, 300) + "..." : s);
    } else {
      c.detail = "vanishes identically on the Kummer surface";
    }
  } catch (const PoleError& err) {
    c.detail = std::string("pole: ") + err.what();
  }
  return c;
}

MultiPoly weierstrass_target(const std::string& rhs, const std::map<std::string, Expr>& names) {
  return to_poly(Expr::var(Var::Y).pow(2) - parse_in(rhs, names));
}

bool is_zero_at(const std::string& poly, const Bindings& lambda) {
  return to_ratfn(parse_in(poly)).specialize(lambda).is_zero();
}

}  // namespace

bool FibrationData::ok() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool EntryReport::ok() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Bindings generic_lambda() { return {{Var::L1, FieldElement(3)}, {Var::L2, FieldElement(5)}}; }

std::optional<std::string> generic_precheck(const Bindings& lambda) {
  static const std::vector<std::pair<std::string, std::string>> conditions = {
      {"l1", "l1 = 0"},
      {"l1-1", "l1 = 1"},
      {"l2", "l2 = 0"},
      {"l2-1", "l2 = 1"},
      {"l1-l2", "l1 = l2"},
      {"l1+l2-1", "l2 = 1 - l1"},
      {"l1*l2-1", "l2 = 1/l1"},
      {"l2*(l1-1)-l1", "l2 = l1/(l1 - 1)"},
      {"l1+l2", "l2 = -l1"},
      {"l1+l2-2", "l2 = 2 - l1"},
      {"l2*(2*l1-1)-l1", "l2 = l1/(2 l1 - 1)"},
      {"l1^6-1", "l1 is a sixth root of unity"},
      {"l2^6-1", "l2 is a sixth root of unity"},
  };
  for (auto& [p, text] : conditions)
    if (is_zero_at(p, lambda)) return text;
  return std::nullopt;
}

std::optional<DegeneracyNote> matching_degeneracy(const CatalogEntry& e, const Bindings& lambda) {
  for (auto& n : e.degeneracies) {
    bool all = true;
    for (auto& c : n.conditions) all = all && is_zero_at(c, lambda);
    if (all) return n;
  }
  return std::nullopt;
}

WeierstrassModel entry_model(const CatalogEntry& e, const Bindings& lambda) {
  auto names = model_names(e);
  RatFn rhs = to_ratfn(parse_in(e.model, names));
  auto w = WeierstrassModel::from_equation(RatFn::var(Var::Y).pow(2) - rhs);
  return lambda.empty() ? w : w.specialize(lambda);
}

SectionTable entry_sections(const CatalogEntry& e, const Bindings& lambda) {
  auto names = model_names(e);
  SectionTable t;
  for (auto& s : e.sections)
    t[s.name] = Point::affine(specialize(to_ratfn(parse_in(s.x, names)), lambda),
                              specialize(to_ratfn(parse_in(s.y, names)), lambda));
  return t;
}

FieldElement parse_lambda(const std::string& text, const NumberField* field) {
  RatFn r = to_ratfn(parse_expr(text, field));
  if (!r.is_constant()) throw ParseError("not a constant: " + text);
  return r.constant_value();
}

FibrationData construct(const std::string& tag, const Bindings& lambda, bool allow_degenerate) {
  const CatalogEntry& e = catalog_entry(tag);
  for (auto& [v, x] : lambda)
    if (x.is_zero() || x.is_one()) throw std::invalid_argument(std::string(var_name(v)) + " must differ from 0 and 1");
  if (!lambda.empty() && !allow_degenerate)
    if (auto n = matching_degeneracy(e, lambda)) throw DegeneracyError(tag, *n);

  FibrationData d;
  d.tag = tag;
  d.lambda = lambda;
  d.model = entry_model(e, lambda);
  auto inv = d.model.invariants();
  d.discriminant = inv.disc;
  d.j = d.model.j_invariant();
  d.fibers = fiber_configuration(d.model);

  FiberMultiset expected = parse_fiber_summary(e.fibers);
  d.checks.push_back({"fibers match the catalog", d.fibers.multiset() == expected,
                      d.fibers.summary() + " (catalog: " + fiber_summary(expected) + ")"});
  d.checks.push_back({"Euler number 24", d.fibers.euler_sum() == 24, std::to_string(d.fibers.euler_sum())});

  SectionTable table = entry_sections(e, lambda);
  bool on = true;
  std::vector<std::string> off;
  for (auto& s : e.sections) {
    const Point& p = table.at(s.name);
    if (!on_curve(d.model, p)) {
      on = false;
      off.push_back(s.name);
      continue;
    }
    d.sections.push_back({s.name, p, height(d.model, d.fibers, p), zero_intersection(d.model, d.fibers, p)});
  }
  if (!e.sections.empty())
    d.checks.push_back({"sections lie on the curve", on, on ? std::to_string(e.sections.size()) + " sections" : "off: " + join(off)});
  if (!on) return d;

  std::vector<Point> tors;
  bool tors_height = true;
  for (auto& n : e.torsion_sections) {
    tors.push_back(table.at(n));
    for (auto& s : d.sections)
      if (s.name == n && sgn(s.height) != 0) tors_height = false;
  }
  if (!tors.empty()) d.checks.push_back({"torsion sections have height 0", tors_height, join(e.torsion_sections)});
  try {
    d.torsion = torsion_structure(d.model, tors);
  } catch (const std::exception& err) {
    d.torsion = std::string("error: ") + err.what();
  }
  d.checks.push_back({"torsion group", d.torsion == e.torsion, d.torsion + " (catalog: " + e.torsion + ")"});

  for (auto& r : e.relations) {
    bool ok = verify_relation(d.model, table, parse_relation(r));
    d.checks.push_back({"relation " + r, ok, ok ? "holds in the group law" : "fails"});
  }

  Rational gram_det = 1;
  if (!e.basis.empty()) {
    d.gram = gram_matrix(d.model, d.fibers, table, e.basis);
    gram_det = d.gram->det();
    d.lattice = identify_lattice(*d.gram);
    if (e.gram)
      d.checks.push_back({"height matrix", d.gram->to_string() == *e.gram,
                          d.gram->to_string() + " on {" + join(e.basis) + "}"});
  } else {
    d.lattice = "0";
  }
  d.checks.push_back({"Mordell-Weil lattice", d.lattice == e.mwl, d.lattice + " (catalog: " + e.mwl + ")"});
  int rank = shioda_tate_rank(d.fibers, 18);
  d.checks.push_back({"Shioda-Tate rank", rank == static_cast<int>(e.basis.size()),
                      "18 - 2 - trivial rank = " + std::to_string(rank)});
  int torder = torsion_group_order(e.torsion);
  Rational disc = ns_discriminant(d.fibers, gram_det, torder);
  d.checks.push_back({"Neron-Severi discriminant", abs(disc) == 16, "|disc NS| = " + Rational(abs(disc)).get_str()});
  return d;
}

Check substitution_check(const CatalogEntry& e) {
  auto names = coordinate_names(e);
  return identity_check("substitution identity", names.at("u"), parse_in(e.x, names), parse_in(e.y, names),
                        weierstrass_target(e.model, model_names(e)));
}

Check parameter_shape_check(const CatalogEntry& e) {
  Expr u = parse_in(e.parameter);
  auto f = std::make_shared<const KummerField>();
  KummerElement k = KummerElement::from_expr(u, f);
  bool has_t = (u.variables() >> static_cast<int>(Var::T)) & 1;
  bool ok = e.parameter_has_t ? (has_t && k.a().is_zero() && !k.b().is_zero()) : (!has_t && k.in_base());
  return {"parameter shape", ok, e.parameter_has_t ? "u = t*phi(x1, x2)" : "u in k(x1, x2)"};
}

std::vector<Check> divisor_checks(const CatalogEntry& e, const FiberConfiguration* cfg) {
  std::vector<Check> out;
  std::vector<Divisor> ds;
  for (auto& fd : e.divisors) {
    Check c{"divisor at u = " + fd.at, false, ""};
    try {
      Divisor d = Divisor::parse(fd.divisor);
      KodairaType t = classify_divisor(d);
      c.pass = t == KodairaType::parse(fd.type);
      c.detail = fd.divisor + " is " + t.name();
      if (cfg) {
        Place p = fd.at == "inf" ? Place::at_infinity()
                                 : Place::finite(MultiPoly::var(Var::U) - MultiPoly(fd.at == "0" ? 0 : 1));
        KodairaType w = cfg->at(p).type;
        // the Weierstrass fiber must have the same dual graph
        bool same = w == t || (w.root_lattice() == t.root_lattice() && w.components() == t.components());
        c.pass = c.pass && same;
        c.detail += ", Weierstrass fiber " + w.name();
      }
      ds.push_back(d);
    } catch (const std::exception& err) {
      c.detail = fd.divisor + ": " + err.what();
    }
    out.push_back(c);
  }
  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = i + 1; j < ds.size(); ++j) {
      auto r = fiber_pair_check(ds[i], ds[j]);
      out.push_back({"fiber pair u = " + e.divisors[i].at + ", u = " + e.divisors[j].at, r.ok(),
                     r.ok() ? "disjoint fibers of one pencil" : "not a fiber pair"});
    }
  return out;
}

EntryReport verify_entry(const std::string& tag) {
  const CatalogEntry& e = catalog_entry(tag);
  EntryReport rep;
  rep.tag = tag;
  rep.checks.push_back(parameter_shape_check(e));
  rep.checks.push_back(substitution_check(e));
  if (e.printed_model) {
    auto names = coordinate_names(e);
    Check printed = identity_check("", names.at("u"), parse_in(e.x, names), parse_in(e.y, names),
                                   weierstrass_target(*e.printed_model, model_names(e)));
    rep.checks.push_back({"printed equation rejected, corrected equation used", !printed.pass,
                          printed.pass ? "printed equation also holds" : "printed equation: " + printed.detail});
  }
  for (auto& a : e.auxiliary) {
    std::map<std::string, Expr> names;
    names["u"] = parse_in(e.parameter);
    Check c = identity_check(a.name, names.at("u"), parse_in(a.x, names), parse_in(a.y, names),
                             to_poly(parse_in(a.equation)));
    if (a.printed_as_erratum) {
      c.name += " rejected";
      c.pass = !c.pass;
    }
    rep.checks.push_back(c);
  }
  rep.data = construct(tag, {}, true);
  if (e.printed_discriminant) {
    RatFn printed = to_ratfn(parse_in(*e.printed_discriminant));
    if (e.printed_discriminant_factor) {
      RatFn factor = to_ratfn(parse_in(*e.printed_discriminant_factor));
      bool ok = printed != rep.data.discriminant && printed * factor == rep.data.discriminant;
      rep.checks.push_back({"printed discriminant corrected", ok,
                            ok ? "computed = printed * " + *e.printed_discriminant_factor
                               : "computed " + rep.data.discriminant.to_string()});
    } else {
      bool ok = printed == rep.data.discriminant;
      rep.checks.push_back({"printed discriminant", ok,
                            ok ? "equal" : "computed " + rep.data.discriminant.to_string()});
    }
  }
  for (auto& c : rep.data.checks) rep.checks.push_back(c);
  for (auto& c : divisor_checks(e, &rep.data.fibers)) rep.checks.push_back(c);
  return rep;
}

EntryReport verify_entry(const std::string& tag, const Bindings& lambda) {
  if (lambda.empty()) return verify_entry(tag);
  const CatalogEntry& e = catalog_entry(tag);
  FibrationData at = construct(tag, lambda);
  EntryReport rep = verify_entry(tag);
  if (e.printed_discriminant) {
    RatFn printed = to_ratfn(parse_in(*e.printed_discriminant)).specialize(lambda);
    if (e.printed_discriminant_factor)
      printed = printed * to_ratfn(parse_in(*e.printed_discriminant_factor)).specialize(lambda);
    bool ok = printed == at.discriminant;
    rep.checks.push_back({"discriminant equality at lambda", ok,
                          ok ? at.discriminant.to_string() : "computed " + at.discriminant.to_string()});
  } else {
    bool ok = rep.data.discriminant.specialize(lambda) == at.discriminant;
    rep.checks.push_back({"discriminant equality at lambda", ok, at.discriminant.to_string()});
  }
  for (auto c : at.checks) {
    c.name += " at lambda";
    rep.checks.push_back(c);
  }
  rep.data = std::move(at);
  return rep;
}

DegeneracyReport degeneracy_check(const std::string& tag, const DegeneracyNote& note) {
  const NumberField* field = NumberField::parse(note.field);
  Bindings lambda = {{Var::L1, parse_lambda(note.l1, field)}, {Var::L2, parse_lambda(note.l2, field)}};
  for (auto& c : note.conditions)
    if (!is_zero_at(c, lambda)) throw std::invalid_argument("sample point is not on the locus " + c);
  DegeneracyReport r;
  r.tag = tag;
  r.note = note;
  auto w = entry_model(catalog_entry(tag), lambda);
  auto cfg = fiber_configuration(w);
  r.observed = cfg.summary();
  if (note.corrected)
    r.matches = cfg.multiset() == parse_fiber_summary(*note.corrected) &&
                cfg.multiset() != parse_fiber_summary(*note.expected);
  else if (note.expected)
    r.matches = cfg.multiset() == parse_fiber_summary(*note.expected);
  else
    r.matches = cfg.multiset() != parse_fiber_summary(catalog_entry(tag).fibers) && cfg.euler_sum() == 24;
  return r;
}

}  // namespace kumfib
