#include "kumfib/report/report.hpp"

#include <regex>
#include <sstream>

namespace kumfib {

namespace {

std::string q(const Rational& r) { return r.get_str(); }

Json lambda_json(const Bindings& lambda) {
  if (lambda.empty()) return nullptr;
  Json j = Json::object();
  for (auto& [v, x] : lambda) j[var_name(v)] = x.to_string();
  return j;
}

std::string lambda_text(const Bindings& lambda) {
  if (lambda.empty()) return "symbolic";
  std::string s;
  for (auto& [v, x] : lambda) s += (s.empty() ? "" : ", ") + std::string(var_name(v)) + " = " + x.to_string();
  return s;
}

std::vector<std::string> failures(const std::vector<Check>& checks) {
  std::vector<std::string> out;
  for (auto& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

bool all_pass(const std::vector<Check>& checks) { return failures(checks).empty(); }

Json header(const std::string& command) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::string type_number(const std::string& tag) { return tag.substr(1); }

std::string kodaira_cell(const KodairaType& t) {
  std::string n = t.name();
  bool star = n.back() == '*';
  if (star) n.pop_back();
  std::string out;
  if (n[0] == 'I' && n.size() > 1 && std::isdigit(static_cast<unsigned char>(n[1])))
    out = "\\text{I}_{" + n.substr(1) + "}";
  else
    out = "\\text{" + n + "}";
  return star ? out + "^{*}" : out;
}

std::string lattice_latex(const std::string& s) {
  if (s == "0" || s.empty()) return "";
  static const std::regex power(R"(\((.*)\)\^(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, power)) return "(" + lattice_latex(m[1]) + ")^{" + std::string(m[2]) + "}";
  static const std::regex zpow(R"(Z\^(\d+))"), cyclic(R"(Z/(\d+))");
  if (std::regex_match(s, m, zpow)) return "{\\bf Z}^{" + std::string(m[1]) + "}";
  if (std::regex_match(s, m, cyclic)) return "{\\bf Z}/" + std::string(m[1]) + "{\\bf Z}";
  if (s == "Z") return "{\\bf Z}";
  static const std::regex root(R"(([ADE])(\d+)(\*?)(\[\d+\])?)");
  if (std::regex_match(s, m, root))
    return std::string(m[1]) + "_" + std::string(m[2]) + (m[3].length() ? "^*" : "") + std::string(m[4]);
  return "\\text{" + s + "}";
}

}  // namespace

Json ratfn_coefficients(const RatFn& f) {
  Json j = Json::object();
  for (auto [key, p] : {std::pair<const char*, const MultiPoly*>{"num", &f.num()}, {"den", &f.den()}}) {
    Json list = Json::array();
    for (auto& c : p->coefficients(Var::U)) list.push_back(c.to_string());
    j[key] = list;
  }
  return j;
}

RatFn ratfn_from_coefficients(const Json& j, const NumberField* field) {
  auto poly = [&](const Json& list) {
    std::vector<MultiPoly> c;
    for (auto& s : list) c.push_back(to_poly(parse_expr(s.get<std::string>(), field)));
    return MultiPoly::from_coefficients(Var::U, c);
  };
  return RatFn(poly(j.at("num")), poly(j.at("den")));
}

WeierstrassModel model_from_json(const Json& w, const NumberField* field) {
  auto a = [&](const char* k) { return ratfn_from_coefficients(w.at(k), field); };
  return WeierstrassModel(a("a1"), a("a2"), a("a3"), a("a4"), a("a6"));
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

Json fibration_json(const ReportRequest& req, const FibrationData& d, const std::vector<Check>& checks) {
  Json j = header(req.command);
  j["type"] = d.tag;
  j["field"] = req.field;
  j["lambda"] = lambda_json(d.lambda);
  if (req.parts & kModelPart) {
    Json w = Json::object();
    const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
    for (int i = 0; i < 5; ++i) w[names[i]] = ratfn_coefficients(d.model.coefficients()[i]);
    j["weierstrass"] = w;
  }
  if (req.parts & (kModelPart | kFiberPart)) {
    j["discriminant"] = d.discriminant.to_string();
    j["j"] = d.j.to_string();
  }
  if (req.parts & kFiberPart) {
    Json fibers = Json::array();
    for (auto& f : d.fibers.fibers())
      fibers.push_back({{"place", f.place.to_string()},
                        {"type", f.type.name()},
                        {"ordDelta", f.ord_disc},
                        {"count", f.count()}});
    j["fibers"] = fibers;
    j["fiber_summary"] = d.fibers.summary();
    j["euler"] = d.fibers.euler_sum();
  }
  if (req.parts & kLatticePart) {
    Json sections = Json::array();
    for (auto& s : d.sections)
      sections.push_back({{"name", s.name},
                          {"x", s.point.x.to_string()},
                          {"y", s.point.y.to_string()},
                          {"height", q(s.height)},
                          {"zeroIntersection", s.zero_meet}});
    j["sections"] = sections;
    if (d.gram) {
      Json rows = Json::array();
      for (auto& r : d.gram->entries) {
        Json row = Json::array();
        for (auto& x : r) row.push_back(q(x));
        rows.push_back(row);
      }
      j["gram"] = {{"basis", d.gram->basis}, {"entries", rows}};
    } else {
      j["gram"] = nullptr;
    }
    j["lattice"] = d.lattice;
    j["torsion"] = d.torsion;
  }
  j["checks"] = checks_json(checks);
  j["failures"] = failures(checks);
  j["ok"] = all_pass(checks);
  return j;
}

Json degeneracy_json(const ReportRequest& req, const std::string& tag, const Bindings& lambda,
                     const DegeneracyNote& note) {
  Json j = header(req.command);
  j["type"] = tag;
  j["field"] = req.field;
  j["lambda"] = lambda_json(lambda);
  Json n = {{"note", note.text}, {"conditions", note.conditions}};
  n["expected"] = note.corrected ? Json(*note.corrected) : note.expected ? Json(*note.expected) : Json(nullptr);
  j["degenerate"] = n;
  j["failures"] = Json::array({"degenerate parameters"});
  j["ok"] = false;
  return j;
}

Json special_json(const SpecialReport& r) {
  Json j = header("special6");
  Json eqs = Json::array();
  for (auto& e : r.equations) {
    Json x = {{"label", e.label}, {"type", e.type}, {"field", e.field}, {"J", e.j.to_string()}};
    x["J_given"] = e.j_given;
    x["J_match"] = e.j_given ? Json(e.j_match) : Json(nullptr);
    x["fibers"] = e.fibers;
    x["expected_fibers"] = e.expected_fibers;
    x["fibers_exact"] = e.fibers_exact;
    x["fibers_match"] = e.fibers_match;
    if (e.lambda_check)
      x["lambda_check"] = {{"name", e.lambda_check->name}, {"pass", e.lambda_check->pass}, {"detail", e.lambda_check->detail}};
    else
      x["lambda_check"] = nullptr;
    x["ok"] = e.ok();
    eqs.push_back(x);
  }
  Json pairs = Json::array();
  for (auto& p : r.pairs)
    pairs.push_back({{"type", p.pair.type},
                     {"first", p.pair.first},
                     {"second", p.pair.second},
                     {"isomorphic", p.iso.isomorphic},
                     {"exhaustive", p.iso.exhaustive},
                     {"j_match", p.iso.j_match},
                     {"reason", p.iso.isomorphic ? p.iso.witness : p.iso.reason},
                     {"confirmed", p.confirmed}});
  j["equations"] = eqs;
  j["pairs"] = pairs;
  Json fail = Json::array();
  for (auto& e : r.equations)
    if (!e.ok()) fail.push_back(e.label);
  for (auto& p : r.pairs)
    if (!p.confirmed) fail.push_back(p.pair.first + "/" + p.pair.second);
  j["failures"] = fail;
  j["ok"] = r.ok();
  return j;
}

Json acceptance_json(const std::vector<CriterionResult>& results) {
  Json j = header("check-all");
  Json list = Json::array();
  Json fail = Json::array();
  bool ok = true;
  for (auto& r : results) {
    list.push_back({{"number", r.number}, {"title", r.title}, {"pass", r.pass}, {"checks", checks_json(r.details)}});
    if (!r.pass) fail.push_back("criterion " + std::to_string(r.number));
    ok = ok && r.pass;
  }
  j["criteria"] = list;
  j["failures"] = fail;
  j["ok"] = ok;
  return j;
}

std::string spaced_summary(const std::string& summary) {
  static const std::regex count(R"((^|\+ )(\d+)([IV]))");
  return std::regex_replace(summary, count, "$1$2 $3");
}

std::string fibration_text(const ReportRequest& req, const FibrationData& d, const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "type: " << d.tag << "\n";
  os << "field: " << req.field << "\n";
  os << "lambda: " << lambda_text(d.lambda) << "\n";
  if (req.parts & kModelPart) os << "weierstrass: " << d.model.to_string() << "\n";
  if (req.parts & (kModelPart | kFiberPart)) {
    os << "discriminant: " << d.discriminant.to_string() << "\n";
    os << "j: " << d.j.to_string() << "\n";
  }
  if (req.parts & kFiberPart) {
    os << "fibers: " << spaced_summary(d.fibers.summary()) << "  (Euler number " << d.fibers.euler_sum() << ")\n";
    for (auto& f : d.fibers.fibers()) {
      os << "  " << f.place.to_string() << ": " << f.type.name() << ", ord(Delta) = " << f.ord_disc;
      if (f.count() > 1) os << ", " << f.count() << " places";
      os << "\n";
    }
  }
  if (req.parts & kLatticePart) {
    if (!d.sections.empty()) os << "sections:\n";
    for (auto& s : d.sections)
      os << "  " << s.name << ": x = " << s.point.x.to_string() << ", y = " << s.point.y.to_string()
         << ", height " << q(s.height) << ", (P.O) = " << s.zero_meet << "\n";
    if (d.gram) {
      os << "gram (";
      for (size_t i = 0; i < d.gram->basis.size(); ++i) os << (i ? ", " : "") << d.gram->basis[i];
      os << "):\n";
      for (auto& r : d.gram->entries) {
        os << "  [";
        for (size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << q(r[i]);
        os << "]\n";
      }
    }
    os << "lattice: " << d.lattice << "\n";
    os << "torsion: " << d.torsion << "\n";
  }
  os << "checks:\n";
  for (auto& c : checks) os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  os << "result: " << (all_pass(checks) ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string degeneracy_text(const std::string& tag, const Bindings& lambda, const DegeneracyNote& note) {
  std::ostringstream os;
  os << "type: " << tag << "\n";
  os << "lambda: " << lambda_text(lambda) << "\n";
  os << "degenerate parameters: " << note.text << "\n";
  if (note.corrected)
    os << "configuration there: " << spaced_summary(*note.corrected) << "\n";
  else if (note.expected)
    os << "configuration there: " << spaced_summary(*note.expected) << "\n";
  return os.str();
}

std::string special_text(const SpecialReport& r) {
  std::ostringstream os;
  for (auto& e : r.equations) {
    os << e.label << " (" << e.type << ", " << e.field << "): J "
       << (e.j_given ? (e.j_match ? "matches" : "DIFFERS") : "not printed") << "; fibers " << e.fibers
       << (e.fibers_exact ? "" : " (catalog " + e.expected_fibers + ")")
       << (e.fibers_match ? "" : " MISMATCH");
    if (e.lambda_check) os << "; " << e.lambda_check->detail << (e.lambda_check->pass ? "" : " FAIL");
    os << "\n";
  }
  for (auto& p : r.pairs)
    os << "pair " << p.pair.type << " " << p.pair.first << " / " << p.pair.second << ": "
       << (p.confirmed ? "not isomorphic" : p.iso.isomorphic ? "ISOMORPHIC" : "undecided") << " ("
       << (p.iso.isomorphic ? p.iso.witness : p.iso.reason) << ")\n";
  os << "result: " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string acceptance_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  bool ok = true;
  for (auto& r : results) {
    os << "criterion " << r.number << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "\n";
    for (auto& c : r.details)
      if (!c.pass) os << "    FAIL " << c.name << ": " << c.detail << "\n";
    ok = ok && r.pass;
  }
  os << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string fibers_latex_cell(const FiberMultiset& m) {
  // same order as fiber_summary
  std::string s = fiber_summary(m), out;
  std::stringstream ss(s);
  std::string term;
  static const std::regex re(R"(\s*(\d*)(\S+)\s*)");
  while (std::getline(ss, term, '+')) {
    std::smatch mt;
    if (!std::regex_match(term, mt, re)) continue;
    if (!out.empty()) out += " + ";
    out += std::string(mt[1]) + kodaira_cell(KodairaType::parse(mt[2]));
  }
  return "$" + out + "$";
}

std::string mwl_latex_cell(const std::string& lattice, const std::string& torsion) {
  std::string a = lattice_latex(lattice), b = lattice_latex(torsion);
  if (a.empty() && b.empty()) return "\\{0\\}";
  if (a.empty()) return "$" + b + "$";
  if (b.empty()) return "$" + a + "$";
  return "$" + a + "\\oplus " + b + "$";
}

std::string latex_row(const FibrationData& d) {
  const CatalogEntry& e = catalog_entry(d.tag);
  std::ostringstream os;
  os << "$\\mathscr J_{" << type_number(d.tag) << "}$\n& \n" << fibers_latex_cell(d.fibers.multiset()) << "\n& \n"
     << mwl_latex_cell(d.lattice, d.torsion) << "\n& \n$\\displaystyle " << parse_expr(e.parameter).to_latex()
     << "$\n\\\\[5pt]\\hline\n";
  return os.str();
}

std::string special_latex(const SpecialReport& r) {
  std::ostringstream os;
  os << "\\begin{tabular}{llll}\n";
  for (auto& e : r.equations)
    os << e.label << " & $\\mathscr J_{" << type_number(e.type) << "}$ & "
       << fibers_latex_cell(parse_fiber_summary(e.fibers)) << " & "
       << (e.ok() ? "verified" : "failed") << " \\\\\n";
  os << "\\end{tabular}\n";
  return os.str();
}

std::string acceptance_latex(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  os << "\\begin{tabular}{rll}\n";
  for (auto& r : results)
    os << r.number << " & " << r.title << " & " << (r.pass ? "pass" : "fail") << " \\\\\n";
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace kumfib
