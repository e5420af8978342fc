#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kumfib/algebra/expr.hpp"
#include "kumfib/local/fibers.hpp"
#include "kumfib/mw/heights.hpp"

namespace kumfib {

// Formulas are kept as text in the parse_expr syntax with variables l1, l2, x1, x2, t, u,
// X, Y; "u" inside coordinate formulas stands for the elliptic parameter.
struct PrintedSection {
  std::string name;
  std::string x, y;
  std::string curve;  // the (-2)-curve it comes from, "" if none is named
};

struct FiberDivisor {
  std::string at;  // "0", "inf" or "1"
  std::string divisor;
  std::string type;
};

// Special values of (l1, l2) where the configuration changes.
struct DegeneracyNote {
  std::string text;
  // all of these polynomials in l1, l2 vanish on the degenerate locus
  std::vector<std::string> conditions;
  // a point of the locus and the configuration expected there
  std::string field = "Q";
  std::string l1, l2;
  std::optional<std::string> expected;
  // configuration actually found when the printed `expected` is wrong
  std::optional<std::string> corrected;
};

// Printed auxiliary Weierstrass-type relation (X0, Y0 of the twisted forms).
struct AuxiliaryIdentity {
  std::string name;
  std::string x, y;      // X0, Y0 in x1, x2, t, l1, l2
  std::string equation;  // in X, Y, u; vanishes at (X0, Y0, u)
  bool printed_as_erratum = false;  // true when the printed form is expected to fail
};

struct CatalogEntry {
  std::string tag;
  std::string parameter;
  std::vector<std::pair<std::string, std::string>> aux;  // named subformulas usable in x, y
  std::string x, y;
  std::string model;  // right-hand side of Y^2 = ...
  std::vector<std::pair<std::string, std::string>> model_aux;  // named subformulas in u, usable in model and sections
  std::optional<std::string> printed_model;  // as printed when it differs from `model`
  std::optional<std::string> printed_discriminant;
  // computed discriminant divided by the printed one, when they differ
  std::optional<std::string> printed_discriminant_factor;
  std::string fibers;  // catalog configuration
  std::string mwl;     // free part of the catalog Mordell-Weil lattice
  std::string torsion;
  std::vector<PrintedSection> sections;
  std::vector<std::string> torsion_sections;
  std::vector<std::string> relations;
  std::vector<std::string> basis;
  std::optional<std::string> gram;
  std::vector<FiberDivisor> divisors;
  std::vector<DegeneracyNote> degeneracies;
  std::vector<AuxiliaryIdentity> auxiliary;
  bool parameter_has_t = false;  // u = t*phi(x1, x2) for J1, J2, J3
  std::string provenance;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& tag);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SectionData {
  std::string name;
  Point point;
  Rational height;
  int zero_meet = 0;
};

struct FibrationData {
  std::string tag;
  Bindings lambda;  // empty when symbolic
  WeierstrassModel model;
  RatFn discriminant, j;
  FiberConfiguration fibers;
  std::vector<SectionData> sections;
  std::optional<GramMatrix> gram;
  std::string lattice;
  std::string torsion;
  std::vector<Check> checks;
  bool ok() const;
};

class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& tag, const DegeneracyNote& note)
      : std::runtime_error(tag + ": degenerate parameters, " + note.text), note_(note) {}
  const DegeneracyNote& note() const { return note_; }

 private:
  DegeneracyNote note_;
};

// Default specialization used where symbolic computation is not needed.
Bindings generic_lambda();
// Conditions under which the catalog may fail for some type; returns the violated one, if any.
std::optional<std::string> generic_precheck(const Bindings& lambda);
// The note of `e` whose locus contains lambda.
std::optional<DegeneracyNote> matching_degeneracy(const CatalogEntry& e, const Bindings& lambda);

WeierstrassModel entry_model(const CatalogEntry& e, const Bindings& lambda = {});
SectionTable entry_sections(const CatalogEntry& e, const Bindings& lambda = {});

// Builds the model at lambda (symbolic when empty) and computes all derived data with
// checks against the catalog. Throws DegeneracyError when lambda lies on a listed locus
// unless allow_degenerate is set.
FibrationData construct(const std::string& tag, const Bindings& lambda = {}, bool allow_degenerate = false);

// Full verification of one entry at symbolic lambda: substitution identity, printed
// discriminant, fibers, sections, relations, Gram matrix, torsion, fiber divisors.
struct EntryReport {
  std::string tag;
  std::vector<Check> checks;
  FibrationData data;
  bool ok() const;
};
EntryReport verify_entry(const std::string& tag);
// The symbolic checks, then the discriminant and all derived data at lambda; data is at lambda.
EntryReport verify_entry(const std::string& tag, const Bindings& lambda);

// Substitution identity for the entry's change of variables.
Check substitution_check(const CatalogEntry& e);
Check parameter_shape_check(const CatalogEntry& e);
std::vector<Check> divisor_checks(const CatalogEntry& e, const FiberConfiguration* cfg = nullptr);

struct DegeneracyReport {
  std::string tag;
  DegeneracyNote note;
  std::string observed;
  bool matches = false;
};
DegeneracyReport degeneracy_check(const std::string& tag, const DegeneracyNote& note);

// "3", "-1", "1/2", "omega", "sqrt(5)", "9+4*sqrt(5)" in the given field
FieldElement parse_lambda(const std::string& text, const NumberField* field);

}  // namespace kumfib
