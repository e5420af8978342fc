#include "kumfib/catalog/catalog.hpp"

namespace kumfib {

namespace {

const char* kD = "(l1-1)^2*u^4+4*(l1-1)*u^3-2*(l1*l2+l1+l2-3)*u^2+4*(l2-1)*u+(l2-1)^2";
const char* kDm = "(l1-1)^2*u^4-4*(l1-1)*u^3-2*(l1*l2+l1+l2-3)*u^2-4*(l2-1)*u+(l2-1)^2";

CatalogEntry j1() {
  CatalogEntry e;
  e.tag = "J1";
  e.parameter = "t*x1/x2";
  e.parameter_has_t = true;
  e.x = "4*t^2*x1^3/x2";
  e.y = "4*t^2*x1^3*(t^2*x1*(x1^2-l1)+x2*(x2^2-l2))/x2^3";
  e.model = "X^3+((l1-1)^2*u^4-2*(l1+1)*(l2+1)*u^2+(l2-1)^2)*X^2+16*l1*l2*u^4*X";
  e.printed_discriminant = std::string("2^12*l1^2*l2^2*u^8*(") + kD + ")*(" + kDm + ")";
  e.fibers = "2I8 + 8I1";
  e.mwl = "Z^2";
  e.torsion = "Z/2";
  e.sections = {
      {"T", "0", "0", "A11"},
      {"P1", "4*u^2", "-4*u^2*((l1-1)*u^2+l2-1)", "A22"},
      {"P2", "4*l2*u^2", "-4*l2*u^2*((l1-1)*u^2-l2+1)", "A23"},
      {"P3", "4*l1*u^2", "4*l1*u^2*((l1-1)*u^2-l2+1)", "A32"},
      {"P4", "4*l1*l2*u^2", "4*l1*l2*u^2*((l1-1)*u^2+l2-1)", "A33"},
      {"P5", "4*l2", "4*l2*((l1+1)*u^2-l2-1)", "A01"},
      {"P6", "4*l1*u^4", "-4*l1*u^4*((l1+1)*u^2-l2-1)", "A10"},
  };
  e.torsion_sections = {"T"};
  e.relations = {"P3 = P2 + T", "P4 = P1 + T", "P5 = P1 + P2", "P6 = P5 + T"};
  e.basis = {"P1", "P2"};
  e.gram = "[[1, 0], [0, 1]]";
  e.divisors = {{"0", "F0 + F1 + G2 + G3 + A02 + A03 + A12 + A13", "I8"},
                {"inf", "G0 + G1 + F2 + F3 + A20 + A21 + A30 + A31", "I8"}};
  e.degeneracies = {{"l1 = l2: d(u) has double roots and the fibration has two I2 fibers",
                     {"l1-l2"},
                     "Q",
                     "3",
                     "3",
                     "2I8 + 2I2 + 4I1"}};
  e.provenance = "catalog row J1; J1 construction: parameter, change of variables, Weierstrass equation, "
                 "discriminant with d(u), divisor of u, sections, relations, height matrix";
  return e;
}

CatalogEntry j2() {
  CatalogEntry e;
  e.tag = "J2";
  e.parameter = "t*(x1-l1)*(x1-x2)/(x2*(x2-1))";
  e.parameter_has_t = true;
  e.x = "-4*l1*(l1-1)*(x1-x2)*(x2-l2)/(x1*(x1-1))";
  e.y = "-4*l1*(l1-1)*(x1-x2)*(x2-l2)*(2*x1-2*x2-l1+l2)/(x1*(x1-1))"
        " + 4*l1*(l1-1)*(x1-x2)^2*(x2-l2)^3*(2*x1*x2-x1-x2)/(t^2*x1^3*(x1-1)^3)";
  e.model = "X^3+(u^4+2*(2*l1*l2-l1-l2+2)*u^2+(l2-l1)^2)*X^2-16*l1*l2*(l1-1)*(l2-1)*u^2*X";
  e.fibers = "I4 + I12 + 8I1";
  e.mwl = "A2*[2]";
  e.torsion = "Z/2";
  e.sections = {
      {"T", "0", "0", "A03"},
      {"P1", "4*l1*l2", "4*l1*l2*(u^2+l1+l2)", "A31"},
      {"P2", "4*(l1-1)*(l2-1)", "-4*(l1-1)*(l2-1)*(u^2-l1-l2+2)", "A32"},
      {"P3", "-4*u^2*(l1-1)*(l2-1)", "4*(l1-1)*(l2-1)*u^2*(u^2+l1+l2)", "A13"},
      {"P4", "-4*l1*l2*u^2", "-4*l1*l2*u^2*(u^2-l1-l2+2)", "A23"},
  };
  e.torsion_sections = {"T"};
  e.relations = {"P3 = P1 + T", "P4 = P2 + T"};
  e.basis = {"P1", "P2"};
  e.gram = "[[4/3, 2/3], [2/3, 4/3]]";
  e.divisors = {{"0", "F3 + A33 + G3 + B33", "I4"},
                {"inf", "F0 + A02 + G2 + A12 + F1 + A10 + G0 + A20 + F2 + A21 + G1 + A01", "I12"}};
  const char* text = "the discriminant of d(u) vanishes: two I1 fibers collide";
  e.degeneracies = {{text, {"l1-l2"}, "Q", "3", "3", std::nullopt},
                    {text, {"l1+l2-1"}, "Q", "3", "-2", std::nullopt},
                    {text, {"l1*l2-1"}, "Q", "3", "1/3", std::nullopt},
                    {text, {"l2*(l1-1)-l1"}, "Q", "3", "3/2", std::nullopt}};
  e.provenance = "catalog row J2; J2 construction: divisors of type I4 and I12, parameter, change of variables, "
                 "Weierstrass equation, sections, relations, height matrix";
  return e;
}

CatalogEntry j3() {
  CatalogEntry e;
  e.tag = "J3";
  e.parameter = "t";
  e.parameter_has_t = true;
  e.x = "4*(l2*(x1-1)*(x1-l1)+l1*(x2-1)*(x2-l2)-l1*l2)*t^2/(x1*x2)";
  e.y = "8*(x2-1)*(x2-l2)*(l2*(l1+1)*x1+l1*(l2+1)*x2-l1*l2)*t^2/(x1^2*x2)"
        " + 4*l1*((l1+1)*x1-2*l1)*t^4/x1 + 4*l2*((l2+1)*x2-2*l2)*t^2/x2";
  e.model = "X^3+4*(l1+1)*(l2+1)*u^2*X^2+16*u^4*((l1*l2+1)*(l1+l2+1)-1)*X"
            "+16*u^4*((l1*(l1-1)*u^2+l2*(l2-1))^2+4*l1*l2*(l1+l2)*u^2)";
  e.fibers = "2IV* + 8I1";
  e.mwl = "(A2*[2])^2";
  e.torsion = "0";
  e.sections = {
      {"P1", "4*u^2*(l1^2*u^2-l2*(l1+1))", "-4*u^2*(2*l1^3*u^4-l1*(l1+1)*(2*l2-1)*u^2+l2*(l2-1))", "A12"},
      {"P2", "4*u^2*(l1^2*u^2-l2^2*(l1+1))/l2^2",
       "-4*u^2*(2*l1^3*u^4+l1*l2^2*(l1+1)*(l2-2)*u^2-l2^4*(l2-1))/l2^3", "A13"},
      {"P3", "-4*(l1*(l2+1)*u^2-l2^2)", "-4*(l1*(l1-1)*u^4-l2*(l2+1)*(2*l1-1)*u^2+2*l2^3)", "A21"},
      {"P4", "-4*l1*l2*u^2", "-4*u^2*(l1*(l1-1)*u^2+l2*(l2-1))", "A22"},
      {"P5", "-4*l1*u^2", "-4*u^2*(l1*(l1-1)*u^2-l2*(l2-1))", "A23"},
      {"P6", "-4*(l1^2*(l2+1)*u^2-l2^2)/l1^2",
       "4*(l1^4*(l1-1)*u^4-l1^2*l2*(l1-2)*(l2+1)*u^2-2*l2^3)/l1^3", "A31"},
      {"P7", "-4*l2*u^2", "4*u^2*(l1*(l1-1)*u^2-l2*(l2-1))", "A32"},
      {"P8", "-4*u^2", "4*u^2*(l1*(l1-1)*u^2+l2*(l2-1))", "A33"},
  };
  e.relations = {"P1 = P5 + P8", "P2 = P4 + P7", "P3 = P7 + P8", "P6 = P4 + P5"};
  e.basis = {"P4", "P8", "P5", "P7"};
  e.gram = "[[4/3, 2/3, 0, 0], [2/3, 4/3, 0, 0], [0, 0, 4/3, 2/3], [0, 0, 2/3, 4/3]]";
  e.divisors = {{"0", "G1 + G2 + G3 + 2A01 + 2A02 + 2A03 + 3F0", "IV*"},
                {"inf", "F1 + F2 + F3 + 2A10 + 2A20 + 2A30 + 3G0", "IV*"}};
  e.provenance = "catalog row J3; Inose pencil divisors; J3 construction: Weierstrass equation, change of "
                 "variables, sections, relations, height matrix";
  return e;
}

CatalogEntry j4() {
  CatalogEntry e;
  e.tag = "J4";
  e.parameter = "x1";
  e.x = "u*(u-1)*(u-l1)*x2";
  e.y = "u^2*(u-1)^2*(u-l1)^2*t";
  e.model = "X*(X-u*(u-1)*(u-l1))*(X-l2*u*(u-1)*(u-l1))";
  e.fibers = "4I0*";
  e.mwl = "0";
  e.torsion = "(Z/2)^2";
  e.sections = {{"T1", "0", "0", "G1"},
                {"T2", "u*(u-1)*(u-l1)", "0", "G2"},
                {"T3", "l2*u*(u-1)*(u-l1)", "0", "G3"}};
  e.torsion_sections = {"T1", "T2", "T3"};
  e.divisors = {{"0", "2F1 + A10 + A11 + A12 + A13", "I0*"},
                {"inf", "2F0 + A00 + A01 + A02 + A03", "I0*"},
                {"1", "2F2 + A20 + A21 + A22 + A23", "I0*"}};
  e.provenance = "catalog row J4; Kummer pencil; J4 construction: change of variables, Weierstrass equation, "
                 "2-torsion sections";
  return e;
}

CatalogEntry j5() {
  CatalogEntry e;
  e.tag = "J5";
  e.parameter = "(x1-x2)*(l2*(x1-l1)+(l1-1)*x2)/((l2*x1-x2)*(x1-l1+(l1-1)*x2))";
  e.aux = {{"X0", "(x1-x2)*(x1-l1)/(x1*((x1-l1)+(l1-1)*x2))"},
           {"Y0", "l1*(l1-1)*t*x2*(x1-1)*(x1-l1)*(x2-x1)/(x1*(l2*x1-x2)*((x1-l1)+(l1-1)*x2)^2)"}};
  e.x = "l1*(l2-1)*(u-1)*(u-l1*l2+l1-1)*((l1*l2-l1-l2)*u+l2)*X0";
  e.y = "l1^2*(l2-1)^2*(u-1)^2*(u-l1*l2+l1-1)*((l1*l2-l1-l2)*u+l2)*Y0";
  e.model_aux = {{"alpha", "-l1*(l2-1)*(u-1)*((l1*l2-1)*u-l1+1)*((l1*l2-l1-l2)*u+l2)"},
                 {"beta", "l1*(l2-1)*u*(u-1)*(u-l1*l2+l1-1)*((l1*l2-l2)*u-l1+l2)"}};
  e.model = "X*(X-alpha)*(X-beta)";
  e.printed_discriminant =
      "16*l1^6*l2^2*(l1-1)^2*u^2*(u-1)^12*(u-l1*l2+l1-1)^2*((l1*l2-1)*u-l1+1)^2"
      "*((l1*l2-l2)*u-l1+l2)^2*((l1*l2-l1-l2)*u+l2)^2";
  e.printed_discriminant_factor = "(l2-1)^6";
  e.fibers = "I6* + 6I2";
  e.mwl = "0";
  e.torsion = "(Z/2)^2";
  e.sections = {{"T1", "0", "0", "F3"}, {"T2", "alpha", "0", "G2"}, {"T3", "beta", "0", "G3"}};
  e.torsion_sections = {"T1", "T2", "T3"};
  e.divisors = {{"0", "B33 + B12", "I2"},
                {"inf", "B32 + B13", "I2"},
                {"1", "2F0 + A02 + A03 + 2A01 + 2G1 + 2A21 + 2F2 + 2A20 + 2G0 + A10 + A30", "I6*"}};
  e.provenance = "catalog row J5; J5 construction: B-curves, parameter, u-1, X0, Y0, alpha, beta, discriminant, "
                 "2-torsion sections";
  return e;
}

CatalogEntry j6() {
  CatalogEntry e;
  e.tag = "J6";
  e.parameter = "x1/x2";
  e.x = "x1*(x1-l1)*(x1-x2)*(l2*x1-x2)/((x1-1)*x2^3)";
  e.y = "(l1-1)*t*x1^3*(x1-l1)*(x1-x2)*(l2*x1-x2)/((x1-1)*x2^5)";
  e.model = "X*(X-u*(u-1)*(l2*u-l1))*(X-u*(u-l1)*(l2*u-1))";
  e.printed_discriminant = "16*u^8*(l1-1)^2*(l2-1)^2*(u-1)^2*(u-l1)^2*(l2*u-1)^2*(l2*u-l1)^2";
  e.fibers = "2I2* + 4I2";
  e.mwl = "0";
  e.torsion = "(Z/2)^2";
  e.sections = {{"T1", "0", "0", "F3"},
                {"T2", "u*(u-l1)*(l2*u-1)", "0", "G2"},
                {"T3", "u*(u-1)*(l2*u-l1)", "0", "G3"}};
  e.torsion_sections = {"T1", "T2", "T3"};
  e.divisors = {{"0", "2F1 + 2A10 + 2G0 + A12 + A13 + A20 + A30", "I2*"},
                {"inf", "2F0 + 2A01 + 2G1 + A02 + A03 + A21 + A31", "I2*"}};
  e.provenance = "catalog row J6; J6 construction: divisor of x1/x2, change of variables, Weierstrass equation, "
                 "discriminant, 2-torsion sections";
  return e;
}

CatalogEntry j7() {
  CatalogEntry e;
  e.tag = "J7";
  e.parameter = "(x2-l2)*(x1-x2)/((x2-1)*(l2*x1-x2))";
  e.x = "l2*u*(u-1)^2*x1/x2";
  e.y = "l2*(l2-1)*u^2*(u-1)^2/t";
  e.model = "X^3-u*(u-1)*((l1*l2+1)*u-l1-l2)*X^2+l1*l2*u^2*(u-1)^4*X";
  e.fibers = "I4* + 2I0* + 2I1";
  e.mwl = "0";
  e.torsion = "Z/2";
  e.sections = {{"T", "0", "0", "F2"}};
  e.torsion_sections = {"T"};
  e.divisors = {{"0", "2G3 + A03 + A13 + A33 + B33", "I0*"},
                {"inf", "2G2 + A02 + A12 + A32 + B32", "I0*"},
                {"1", "A01 + A31 + 2G1 + 2A21 + 2F2 + 2A20 + 2G0 + A10 + A30", "I4*"}};
  e.provenance = "catalog row J7; J7 construction: divisors, parameter, u-1, change of variables, Weierstrass "
                 "equation, 2-torsion section";
  return e;
}

CatalogEntry j8() {
  CatalogEntry e;
  e.tag = "J8";
  e.parameter = "-(x2-l2)*(x1-x2)/(l2*(l2-1)*x1*(x1-1))";
  e.x = "u*((l1-1)*(l2-1)*u-1)*(x2-1)*(l2*x1-x2)/((l2-1)*x2*(x1-1))";
  e.y = "-u^3*((l1-1)*(l2-1)*u-1)*l2*(x2-1)*(l2*x1-x2)/(t*x2*(x1-1))";
  e.model = "X^3-u*((2*l1*l2-l1-l2+2)*u-2)*X^2-u^2*(u-1)*(l1*l2*u-1)*((l1-1)*(l2-1)*u-1)*X";
  e.printed_discriminant =
      "16*u^8*(u-1)^2*(l1*l2*u-1)^2*((l1-1)*(l2-1)*u-1)^2*(4*l1*l2*(l1-1)*(l2-1)*u+(l1-l2)^2)";
  e.fibers = "III* + I2* + 3I2 + I1";
  e.mwl = "0";
  e.torsion = "Z/2";
  e.sections = {{"T", "0", "0", "G2"}};
  e.torsion_sections = {"T"};
  e.divisors = {{"0", "A01 + A02 + 2F0 + 2A03 + 2G3 + A33 + B33", "I2*"},
                {"inf", "A12 + 2F1 + 3A10 + 4G0 + 3A20 + 2F2 + A21 + 2A30", "III*"},
                {"1", "B32 + B31", "I2"}};
  const char* text = "the I1 fiber merges with an I2 fiber into a fiber of type III";
  e.degeneracies = {{text, {"l1+l2"}, "Q", "3", "-3", "III* + I2* + 2I2 + III"},
                    {text, {"l1+l2-2"}, "Q", "3", "-1", "III* + I2* + 2I2 + III"},
                    {text, {"l2*(2*l1-1)-l1"}, "Q", "3", "3/5", "III* + I2* + 2I2 + III"}};
  e.provenance = "catalog row J8; J8 construction: divisors (4E0 read as 4G0), parameter, B31, change of "
                 "variables, Weierstrass equation, discriminant, 2-torsion section";
  return e;
}

CatalogEntry j9() {
  CatalogEntry e;
  e.tag = "J9";
  e.parameter =
      "(x2-l2)*(x1-x2)*(l2*x1*(x1-1)+(l1-1)*(x2-1)*(l2*x1-x2))"
      "/((x2-1)*(l2*x1-x2)*(l2*x1*(x1-1)+(l1-1)*(x2-l2)*(x1-x2)))";
  e.aux = {{"X0", "-l2*(l2-1)*x1*(x1-1)/((x2-1)*(l2*x1-x2))"}, {"Y0", "l2*(l2-1)/t"}};
  e.x = "u*(u-1)*X0";
  e.y = "u^2*(u-1)^2*Y0";
  e.model = "X^3+(l1*l2-2*l1-2*l2+1)*u*(u-1)^2*X^2-(l1+l2-1)*(l1*l2-l1-l2)*u^2*(u-1)^4*X"
            "-l1*l2*(l1-1)*(l2-1)*u^3*(u-1)^5";
  e.fibers = "II* + 2I0* + 2I1";
  e.mwl = "0";
  e.torsion = "0";
  e.divisors = {{"0", "2G3 + A03 + A33 + B33 + P33", "I0*"},
                {"inf", "2G2 + A02 + A32 + B32 + P32", "I0*"},
                {"1", "A01 + 2G1 + 3A21 + 4F2 + 5A20 + 6G0 + 3A30 + 4A10 + 2F1", "II*"}};
  e.auxiliary = {{"twisted form in (X0, Y0)", "-l2*(l2-1)*x1*(x1-1)/((x2-1)*(l2*x1-x2))", "l2*(l2-1)/t",
                  "u*(u-1)*Y^2-(X^3+(l1*l2-2*l1-2*l2+1)*(u-1)*X^2-(l1+l2-1)*(l1*l2-l1-l2)*(u-1)^2*X"
                  "-l1*l2*(l1-1)*(l2-1)*(u-1)^2)",
                  false}};
  const char* text = "a sixth root of unity: two I1 fibers merge into a fiber of type II";
  e.degeneracies = {{text, {"l1^2-l1+1"}, "Q(omega)", "-omega", "3", "II* + 2I0* + II"},
                    {text, {"l2^2-l2+1"}, "Q(omega)", "3", "-omega", "II* + 2I0* + II"}};
  e.provenance = "catalog row J9; J9 construction: P33, P32, divisors, parameter, u-1, X0, Y0, twisted form, "
                 "Weierstrass equation, discriminant factors";
  return e;
}

CatalogEntry j10() {
  CatalogEntry e;
  e.tag = "J10";
  e.parameter =
      "(x2-l2)*(x1-x2)*((l1-1)*(x2-1)*(l2*x1-x2)+l2*x1*(x1-1))/(x2*(x2-1)*(x1-1)*(l2*x1-x2))";
  e.aux = {{"X0", "l1*(l1-1)*(x2-1)*(l2*x1-x2)/(x1*(x1-1))"},
           {"Y0", "l1*(l1-1)*(x2-1)^2*(l2*x1-x2)^2/(t*x1^2*(x1-1)^2)"}};
  e.x = "u*X0";
  e.y = "u^2*Y0";
  e.model = "X^3+u*(u-l1-l2+1)*(u+l1*l2-l1-l2)*X^2+l1*l2*(l1-1)*(l2-1)*u^2*(2*u+l1*l2-2*l1-2*l2+1)*X"
            "+l1^2*l2^2*(l1-1)^2*(l2-1)^2*u^3";
  e.printed_model = "X^3+u*(u-l1-l2+1)*(u+l1*l2-l1-l2)*X^2+l1*l2*(l1-1)*(l2-1)*u^2*(2*u+l1*l2-2*l1-2*l2+1)*X"
                    "+l1^2*l2^2*(l1-1)^2*(l1-1)^2*u^3";
  e.fibers = "I8* + I0* + 4I1";
  e.mwl = "0";
  e.torsion = "0";
  e.divisors = {{"0", "2G3 + A13 + A33 + B33 + P33", "I0*"},
                {"inf", "B32 + A32 + 2G2 + 2A02 + 2F0 + 2A01 + 2G1 + 2A21 + 2F2 + 2A20 + 2G0 + A10 + A30", "I8*"}};
  const char* x0 = "l1*(l1-1)*(x2-1)*(l2*x1-x2)/(x1*(x1-1))";
  const char* y0 = "l1*(l1-1)*(x2-1)^2*(l2*x1-x2)^2/(t*x1^2*(x1-1)^2)";
  e.auxiliary = {
      {"twisted form in (X0, Y0) as printed", x0, y0,
       "u*Y^2-(X^3-(u+l1+l2-1)*(u-l1*l2+l1+l2)*X^2+l1*l2*(l1-1)*(l2-1)*(2*u-l1*l2+2*l1+2*l2-1)*X"
       "+l1^2*l2^2*(l1-1)^2*(l1-1)^2)",
       true},
      {"twisted form in (X0, Y0) from the Weierstrass equation", x0, y0,
       "u*Y^2-(X^3+(u-l1-l2+1)*(u+l1*l2-l1-l2)*X^2+l1*l2*(l1-1)*(l2-1)*(2*u+l1*l2-2*l1-2*l2+1)*X"
       "+l1^2*l2^2*(l1-1)^2*(l2-1)^2)",
       false}};
  e.provenance = "catalog row J10; J10 construction: divisors, parameter, X0, Y0, twisted form, Weierstrass "
                 "equation (constant term (l1-1)^2 (l1-1)^2 corrected to (l1-1)^2 (l2-1)^2)";
  return e;
}

CatalogEntry j11() {
  CatalogEntry e;
  e.tag = "J11";
  e.parameter = "x2*(x2-l2)*(x1-x2)/(x1*(x2-1)*(l2*x1-x2))";
  e.x = "u*(l1-1)*(x2-l2)*(x1-x2)/(x1*(x1-1))";
  e.y = "u^2*(l1-1)*(x2-l2)^2*(x1-x2)^2/(t*x1^2*(x1-1)^2)";
  e.model = "X^3+(l1*u^2-(2*l1*l2-l1-l2+2)*u+l2)*u*X^2+(l1-1)*(l2-1)*((l1*l2+1)*u-2*l2)*u^3*X"
            "+l2*(l1-1)^2*(l2-1)^2*u^5";
  e.fibers = "2I4* + 4I1";
  e.mwl = "0";
  e.torsion = "0";
  e.divisors = {{"0", "A31 + A21 + 2G1 + 2A01 + 2F0 + 2A03 + 2G3 + A33 + B33", "I4*"},
                {"inf", "A30 + A20 + 2G0 + 2A10 + 2F1 + 2A12 + 2G2 + A32 + B32", "I4*"}};
  e.degeneracies = {
      {"l1 = -1, l2 = 9 +- 4 sqrt(5): one I2 fiber and one type II fiber",
       {"l1+1", "l2^2-18*l2+1"},
       "Q(sqrt(5))",
       "-1",
       "9+4*sqrt(5)",
       "2I4* + I2 + II",
       "2I4* + II + 2I1"},
      {"l1 = -1, l2 = +-sqrt(-1): two type II fibers", {"l1+1", "l2^2+1"}, "Q(i)", "-1", "i", "2I4* + 2II"}};
  e.provenance = "catalog row J11; J11 construction: divisors, parameter, change of variables, Weierstrass "
                 "equation; degenerations of the remark following it";
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {j1(), j2(), j3(), j4(), j5(), j6(), j7(), j8(), j9(), j10(), j11()};
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& tag) {
  for (auto& e : catalog())
    if (e.tag == tag) return e;
  throw std::invalid_argument("unknown fibration type " + tag);
}

}  // namespace kumfib
