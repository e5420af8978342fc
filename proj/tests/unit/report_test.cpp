#include <doctest.h>

#include <fstream>

#include "kumfib/report/report.hpp"

using namespace kumfib;

namespace {

// The subset of JSON Schema used by schema/report.schema.json.
class Validator {
 public:
  explicit Validator(Json schema) : root_(std::move(schema)) {}

  std::vector<std::string> errors(const Json& doc) const {
    std::vector<std::string> out;
    check(root_, doc, "$", out);
    return out;
  }

 private:
  Json root_;

  const Json& resolve(const Json& s) const {
    if (!s.contains("$ref")) return s;
    std::string ref = s["$ref"];
    REQUIRE(ref.rfind("#/$defs/", 0) == 0);
    return resolve(root_["$defs"][ref.substr(8)]);
  }

  static bool has_type(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  void check(const Json& schema, const Json& v, const std::string& path, std::vector<std::string>& out) const {
    const Json& s = resolve(schema);
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (auto& t : s["type"]) ok = ok || has_type(v, t);
      } else {
        ok = has_type(v, s["type"]);
      }
      if (!ok) {
        out.push_back(path + ": wrong type");
        return;
      }
    }
    if (s.contains("enum")) {
      bool found = false;
      for (auto& e : s["enum"]) found = found || e == v;
      if (!found) out.push_back(path + ": not in enum");
    }
    if (s.contains("oneOf")) {
      int n = 0;
      for (auto& alt : s["oneOf"]) {
        std::vector<std::string> sub;
        check(alt, v, path, sub);
        n += sub.empty();
      }
      if (n != 1) out.push_back(path + ": oneOf matched " + std::to_string(n));
    }
    if (v.is_object()) {
      if (s.contains("required"))
        for (auto& k : s["required"])
          if (!v.contains(k.get<std::string>())) out.push_back(path + ": missing " + k.get<std::string>());
      for (auto& [k, x] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(k))
          check(s["properties"][k], x, path + "." + k, out);
        else if (s.value("additionalProperties", true) == false)
          out.push_back(path + ": unexpected " + k);
      }
    }
    if (v.is_array() && s.contains("items"))
      for (size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], path + "[" + std::to_string(i) + "]", out);
  }
};

const Validator& validator() {
  static Validator v = [] {
    std::ifstream f(std::string(KUMFIB_SOURCE_DIR) + "/schema/report.schema.json");
    REQUIRE(f.good());
    return Validator(Json::parse(f));
  }();
  return v;
}

void check_valid(const Json& doc) {
  auto errs = validator().errors(doc);
  for (auto& e : errs) MESSAGE(e);
  CHECK(errs.empty());
}

}  // namespace

TEST_CASE("fibration reports validate against the schema") {
  for (auto& e : catalog()) {
    CAPTURE(e.tag);
    auto d = construct(e.tag, generic_lambda());
    for (unsigned parts : {unsigned(kAllParts), unsigned(kFiberPart), unsigned(kLatticePart)})
      check_valid(fibration_json({"construct", "Q", parts}, d, d.checks));
  }
  auto rep = verify_entry("J2");
  check_valid(fibration_json({"verify", "Q", kAllParts}, rep.data, rep.checks));
}

TEST_CASE("degeneracy, special and acceptance reports validate") {
  const auto& note = catalog_entry("J1").degeneracies.front();
  check_valid(degeneracy_json({"construct"}, "J1", generic_lambda(), note));
  check_valid(special_json(special_case_suite()));
  check_valid(acceptance_json(acceptance_suite({4})));
}

TEST_CASE("the validator rejects malformed reports") {
  auto d = construct("J4");
  Json j = fibration_json({"construct"}, d, d.checks);
  Json bad = j;
  bad["fibers"][0].erase("ordDelta");
  CHECK_FALSE(validator().errors(bad).empty());
  bad = j;
  bad["type"] = "J12";
  CHECK_FALSE(validator().errors(bad).empty());
  bad = j;
  bad["extra"] = 1;
  CHECK_FALSE(validator().errors(bad).empty());
}

TEST_CASE("JSON round trip") {
  for (std::string tag : {"J1", "J3", "J5", "J9", "J11"}) {
    CAPTURE(tag);
    for (const Bindings& lambda : {Bindings{}, generic_lambda()}) {
      auto d = construct(tag, lambda);
      Json j = fibration_json({"construct"}, d, d.checks);
      Json back = Json::parse(j.dump());
      CHECK(back == j);
      auto w = model_from_json(back["weierstrass"], nullptr);
      CHECK(w == d.model);
      CHECK(w.discriminant().to_string() == back["discriminant"].get<std::string>());
      CHECK(w.j_invariant().to_string() == back["j"].get<std::string>());
    }
  }
  const NumberField* w = NumberField::omega();
  Bindings lam = {{Var::L1, FieldElement(-1)}, {Var::L2, -FieldElement::generator(w)}};
  auto d = construct("J6", lam, true);
  Json j = fibration_json({"construct", "Q(omega)"}, d, d.checks);
  CHECK(model_from_json(Json::parse(j.dump())["weierstrass"], w) == d.model);
}

TEST_CASE("reports are deterministic") {
  auto a = construct("J8", generic_lambda()), b = construct("J8", generic_lambda());
  CHECK(fibration_json({"construct"}, a, a.checks).dump() == fibration_json({"construct"}, b, b.checks).dump());
  CHECK(fibration_text({"construct"}, a, a.checks) == fibration_text({"construct"}, b, b.checks));
  CHECK(special_json(special_case_suite()).dump() == special_json(special_case_suite()).dump());
}

TEST_CASE("text and LaTeX emitters") {
  auto d = construct("J4");
  auto text = fibration_text({"construct"}, d, d.checks);
  CHECK(text.find("4 I0*") != std::string::npos);
  CHECK(text.find("torsion: (Z/2)^2") != std::string::npos);
  CHECK(spaced_summary("III* + I2* + 3I2 + I1") == "III* + I2* + 3 I2 + I1");
  CHECK(fibers_latex_cell(parse_fiber_summary("2I2* + 4I2")) == "$2\\text{I}_{2}^{*} + 4\\text{I}_{2}$");
  CHECK(mwl_latex_cell("Z^2", "Z/2") == "${\\bf Z}^{2}\\oplus {\\bf Z}/2{\\bf Z}$");
  CHECK(mwl_latex_cell("A2*[2]", "Z/2") == "$A_2^*[2]\\oplus {\\bf Z}/2{\\bf Z}$");
  CHECK(mwl_latex_cell("(A2*[2])^2", "0") == "$(A_2^*[2])^{2}$");
  CHECK(mwl_latex_cell("0", "(Z/2)^2") == "$({\\bf Z}/2{\\bf Z})^{2}$");
  CHECK(mwl_latex_cell("0", "0") == "\\{0\\}");
}
