#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "kumfib/catalog/acceptance.hpp"
#include "kumfib/catalog/catalog.hpp"
#include "kumfib/catalog/special.hpp"

namespace kumfib {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Parts of a fibration report; construct and verify use all of them.
enum ReportPart : unsigned {
  kModelPart = 1,
  kFiberPart = 2,
  kLatticePart = 4,
  kAllParts = 7,
};

struct ReportRequest {
  std::string command;
  std::string field = "Q";
  unsigned parts = kAllParts;
};

// {num, den} coefficient lists in u, index = exponent
Json ratfn_coefficients(const RatFn& f);
RatFn ratfn_from_coefficients(const Json& j, const NumberField* field);
WeierstrassModel model_from_json(const Json& weierstrass, const NumberField* field);

Json checks_json(const std::vector<Check>& checks);
Json fibration_json(const ReportRequest& req, const FibrationData& d, const std::vector<Check>& checks);
Json degeneracy_json(const ReportRequest& req, const std::string& tag, const Bindings& lambda,
                     const DegeneracyNote& note);
Json special_json(const SpecialReport& r);
Json acceptance_json(const std::vector<CriterionResult>& results);

std::string fibration_text(const ReportRequest& req, const FibrationData& d, const std::vector<Check>& checks);
std::string degeneracy_text(const std::string& tag, const Bindings& lambda, const DegeneracyNote& note);
std::string special_text(const SpecialReport& r);
std::string acceptance_text(const std::vector<CriterionResult>& results);

// "2I8 + 8I1" -> "2 I8 + 8 I1"
std::string spaced_summary(const std::string& summary);
// $2\text{I}_{8} + 8\text{I}_{1}$ cell
std::string fibers_latex_cell(const FiberMultiset& m);
std::string mwl_latex_cell(const std::string& lattice, const std::string& torsion);
// $\mathscr J_{n}$ & fibers & MWL & parameter \\[5pt]\hline
std::string latex_row(const FibrationData& d);
std::string special_latex(const SpecialReport& r);
std::string acceptance_latex(const std::vector<CriterionResult>& results);

}  // namespace kumfib
