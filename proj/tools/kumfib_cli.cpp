#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kumfib/report/report.hpp"

using namespace kumfib;

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kUsage = 2, kDegenerate = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::string lambda1, lambda2;
  std::string field = "Q";
  std::string format = "text";
  std::string output;
  std::string fixtures;
  bool allow_degenerate = false;
};

Bindings parse_lambdas(const Options& o) {
  if (o.lambda1.empty() != o.lambda2.empty()) throw UsageError("give both --lambda1 and --lambda2, or neither");
  if (o.lambda1.empty()) return {};
  const NumberField* field;
  try {
    field = NumberField::parse(o.field);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  Bindings generic = generic_lambda(), b;
  for (auto [v, text] : {std::pair{Var::L1, &o.lambda1}, std::pair{Var::L2, &o.lambda2}}) {
    FieldElement x;
    if (*text == "generic") {
      x = generic.at(v);
    } else {
      if (text->find("omega") != std::string::npos && field != NumberField::omega())
        throw UsageError(std::string(var_name(v)) + ": omega requires --field Q(omega)");
      try {
        x = parse_lambda(*text, field);
      } catch (const std::exception& e) {
        throw UsageError(std::string(var_name(v)) + ": " + e.what());
      }
    }
    if (x.is_zero() || x.is_one()) throw UsageError(std::string(var_name(v)) + " must differ from 0 and 1");
    b[v] = x;
  }
  return b;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw UsageError("cannot write " + o.output);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int fibration_command(const std::string& command, const Options& o) {
  catalog_entry(o.type);
  Bindings lambda = parse_lambdas(o);
  ReportRequest req{command, o.field, kAllParts};
  if (command == "fibers") req.parts = kFiberPart;
  if (command == "mwl") req.parts = kLatticePart;

  FibrationData d;
  std::vector<Check> checks;
  try {
    if (command == "verify") {
      if (o.allow_degenerate) throw UsageError("--allow-degenerate does not apply to verify");
      auto rep = verify_entry(o.type, lambda);
      d = std::move(rep.data);
      checks = rep.checks;
    } else {
      d = construct(o.type, lambda, o.allow_degenerate);
      for (auto& c : d.checks) {
        bool fiber_check = c.name == "fibers match the catalog" || c.name == "Euler number 24";
        if (command == "construct" || fiber_check == (command == "fibers")) checks.push_back(c);
      }
    }
  } catch (const DegeneracyError& e) {
    if (o.format == "json")
      emit(o, dump(degeneracy_json(req, o.type, lambda, e.note())));
    else
      emit(o, degeneracy_text(o.type, lambda, e.note()));
    return kDegenerate;
  }

  if (o.format == "json") {
    emit(o, dump(fibration_json(req, d, checks)));
  } else if (o.format == "latex") {
    if (command == "fibers")
      emit(o, fibers_latex_cell(d.fibers.multiset()) + "\n");
    else if (command == "mwl")
      emit(o, mwl_latex_cell(d.lattice, d.torsion) + "\n");
    else
      emit(o, latex_row(d));
  } else {
    emit(o, fibration_text(req, d, checks));
  }
  for (auto& c : checks)
    if (!c.pass) return kCheckFailure;
  return kPass;
}

int special_command(const Options& o) {
  SpecialFixtures fx;
  try {
    fx = load_special_fixtures(o.fixtures.empty() ? default_fixtures_path() : o.fixtures);
  } catch (const FixtureError& e) {
    throw UsageError(std::string("fixtures: ") + e.what());
  }
  auto rep = special_case_suite(fx);
  if (o.format == "json")
    emit(o, dump(special_json(rep)));
  else if (o.format == "latex")
    emit(o, special_latex(rep));
  else
    emit(o, special_text(rep));
  return rep.ok() ? kPass : kCheckFailure;
}

int check_all_command(const Options& o, const std::vector<int>& only) {
  auto results = acceptance_suite(only);
  if (o.format == "json")
    emit(o, dump(acceptance_json(results)));
  else if (o.format == "latex")
    emit(o, acceptance_latex(results));
  else
    emit(o, acceptance_text(results));
  for (auto& r : results)
    if (!r.pass) return kCheckFailure;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic fibrations on the Kummer surface of a product of Legendre curves"};
  app.require_subcommand(1);
  Options o;
  std::vector<int> only;
  const std::vector<std::string> formats = {"text", "json", "latex"};
  const std::vector<std::string> tags = [] {
    std::vector<std::string> t;
    for (auto& e : catalog()) t.push_back(e.tag);
    return t;
  }();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember(formats));
    sub->add_option("-o,--output", o.output, "write the report to this file");
  };
  std::vector<std::pair<std::string, std::string>> fibration_commands = {
      {"construct", "build the Weierstrass model and all derived data"},
      {"verify", "check every printed formula of a type; at lambda, also the specialized data"},
      {"fibers", "singular fibers with their places"},
      {"mwl", "sections, height matrix, lattice and torsion"}};
  for (auto& [name, help] : fibration_commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--type", o.type, "J1 .. J11")->required()->check(CLI::IsMember(tags));
    sub->add_option("--lambda1", o.lambda1, "exact value of l1, or generic");
    sub->add_option("--lambda2", o.lambda2, "exact value of l2, or generic");
    sub->add_option("--field", o.field, "Q, Q(omega), Q(i) or Q(sqrt(D))");
    if (name != "verify") sub->add_flag("--allow-degenerate", o.allow_degenerate, "construct on a degenerate locus");
    common(sub);
  }
  auto* special = app.add_subcommand("special6", "the special-curve equation list and its pairs");
  special->add_option("--fixtures", o.fixtures, "fixtures file (default: KUMFIB_FIXTURES or the bundled file)");
  common(special);
  auto* all = app.add_subcommand("check-all", "the acceptance criteria");
  all->add_option("--only", only, "criterion numbers")->delimiter(',');
  common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    std::string command = app.get_subcommands().front()->get_name();
    if (command == "special6") return special_command(o);
    if (command == "check-all") return check_all_command(o, only);
    return fibration_command(command, o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}
