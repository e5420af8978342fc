#include "kumfib/local/kodaira.hpp"

#include <algorithm>
#include <regex>

namespace kumfib {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int KodairaType::components() const {
  switch (family) {
    case KodairaFamily::I:
      return std::max(n, 1);
    case KodairaFamily::Istar:
      return n + 5;
    case KodairaFamily::II:
      return 1;
    case KodairaFamily::III:
      return 2;
    case KodairaFamily::IV:
      return 3;
    case KodairaFamily::IVstar:
      return 7;
    case KodairaFamily::IIIstar:
      return 8;
    case KodairaFamily::IIstar:
      return 9;
  }
  return 1;
}

int KodairaType::euler() const {
  switch (family) {
    case KodairaFamily::I:
      return n;
    case KodairaFamily::Istar:
      return n + 6;
    case KodairaFamily::II:
      return 2;
    case KodairaFamily::III:
      return 3;
    case KodairaFamily::IV:
      return 4;
    case KodairaFamily::IVstar:
      return 8;
    case KodairaFamily::IIIstar:
      return 9;
    case KodairaFamily::IIstar:
      return 10;
  }
  return 0;
}

std::string KodairaType::root_lattice() const {
  switch (family) {
    case KodairaFamily::I:
      return n >= 2 ? "A" + std::to_string(n - 1) : "";
    case KodairaFamily::Istar:
      return "D" + std::to_string(n + 4);
    case KodairaFamily::II:
      return "";
    case KodairaFamily::III:
      return "A1";
    case KodairaFamily::IV:
      return "A2";
    case KodairaFamily::IVstar:
      return "E6";
    case KodairaFamily::IIIstar:
      return "E7";
    case KodairaFamily::IIstar:
      return "E8";
  }
  return "";
}

int KodairaType::lattice_det() const {
  switch (family) {
    case KodairaFamily::I:
      return std::max(n, 1);
    case KodairaFamily::Istar:
      return 4;
    case KodairaFamily::II:
      return 1;
    case KodairaFamily::III:
      return 2;
    case KodairaFamily::IV:
      return 3;
    case KodairaFamily::IVstar:
      return 3;
    case KodairaFamily::IIIstar:
      return 2;
    case KodairaFamily::IIstar:
      return 1;
  }
  return 1;
}

std::string KodairaType::name() const {
  switch (family) {
    case KodairaFamily::I:
      return "I" + std::to_string(n);
    case KodairaFamily::Istar:
      return "I" + std::to_string(n) + "*";
    case KodairaFamily::II:
      return "II";
    case KodairaFamily::III:
      return "III";
    case KodairaFamily::IV:
      return "IV";
    case KodairaFamily::IVstar:
      return "IV*";
    case KodairaFamily::IIIstar:
      return "III*";
    case KodairaFamily::IIstar:
      return "II*";
  }
  return "?";
}

std::string KodairaType::latex() const {
  switch (family) {
    case KodairaFamily::I:
      return "I_{" + std::to_string(n) + "}";
    case KodairaFamily::Istar:
      return "I_{" + std::to_string(n) + "}^*";
    case KodairaFamily::II:
      return "II";
    case KodairaFamily::III:
      return "III";
    case KodairaFamily::IV:
      return "IV";
    case KodairaFamily::IVstar:
      return "IV^*";
    case KodairaFamily::IIIstar:
      return "III^*";
    case KodairaFamily::IIstar:
      return "II^*";
  }
  return "?";
}

KodairaType KodairaType::parse(const std::string& s) {
  static const std::regex in(R"(I(\d+)(\*?))");
  std::smatch m;
  if (std::regex_match(s, m, in)) {
    int n = std::stoi(m[1]);
    return m[2].length() ? Istar(n) : I(n);
  }
  if (s == "II") return {KodairaFamily::II, 0};
  if (s == "III") return {KodairaFamily::III, 0};
  if (s == "IV") return {KodairaFamily::IV, 0};
  if (s == "IV*") return {KodairaFamily::IVstar, 0};
  if (s == "III*") return {KodairaFamily::IIIstar, 0};
  if (s == "II*") return {KodairaFamily::IIstar, 0};
  throw ClassificationError("unknown Kodaira symbol '" + s + "'");
}

KodairaType classify_kodaira(int c4, int c6, int d) {
  auto fail = [&] {
    auto str = [](int v) { return v >= kNoOrder ? std::string("inf") : std::to_string(v); };
    throw ClassificationError("no Kodaira type for minimal valuations (c4, c6, disc) = (" + str(c4) + ", " + str(c6) +
                              ", " + str(d) + ")");
  };
  if (d < 0 || c4 < 0 || c6 < 0) fail();
  if (d == 0) return KodairaType::I(0);
  if (c4 == 0) return KodairaType::I(d);
  if (d == 2 && c6 == 1) return {KodairaFamily::II, 0};
  if (d == 3 && c4 == 1) return {KodairaFamily::III, 0};
  if (d == 4 && c6 == 2) return {KodairaFamily::IV, 0};
  if (d == 6 && c4 >= 2 && c6 >= 3) return KodairaType::Istar(0);
  if (c4 == 2 && c6 == 3 && d > 6) return KodairaType::Istar(d - 6);
  if (d == 8 && c4 >= 3 && c6 == 4) return {KodairaFamily::IVstar, 0};
  if (d == 9 && c4 == 3) return {KodairaFamily::IIIstar, 0};
  if (d == 10 && c6 == 5) return {KodairaFamily::IIstar, 0};
  fail();
  return {};
}

MinimalOrders minimalize(int c4, int c6, int d) {
  int k = kNoOrder;
  if (c4 < kNoOrder) k = std::min(k, floor_div(c4, 4));
  if (c6 < kNoOrder) k = std::min(k, floor_div(c6, 6));
  if (k == kNoOrder) throw ClassificationError("c4 and c6 both vanish");
  MinimalOrders m;
  m.k = k;
  m.c4 = c4 < kNoOrder ? c4 - 4 * k : kNoOrder;
  m.c6 = c6 < kNoOrder ? c6 - 6 * k : kNoOrder;
  m.disc = d - 12 * k;
  return m;
}

}  // namespace kumfib
