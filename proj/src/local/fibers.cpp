#include "kumfib/local/fibers.hpp"

#include <regex>
#include <sstream>

#include "kumfib/algebra/gcd.hpp"

namespace kumfib {

namespace {

LocalData analyze(const Invariants& inv, const Place& p) {
  LocalData d;
  d.place = p;
  int oc4 = valuation(inv.c4, p), oc6 = valuation(inv.c6, p), od = valuation(inv.disc, p);
  MinimalOrders m = minimalize(oc4 >= kInfiniteOrder ? kNoOrder : oc4, oc6 >= kInfiniteOrder ? kNoOrder : oc6, od);
  d.k = m.k;
  d.ord_c4 = m.c4;
  d.ord_c6 = m.c6;
  d.ord_disc = m.disc;
  d.type = classify_kodaira(m.c4, m.c6, m.disc);
  return d;
}

// descending: II*, III*, IV*, I_n* (large n first), IV, III, II, I_n (large n first)
int display_rank(const KodairaType& t) {
  switch (t.family) {
    case KodairaFamily::IIstar:
      return 0;
    case KodairaFamily::IIIstar:
      return 1;
    case KodairaFamily::IVstar:
      return 2;
    case KodairaFamily::Istar:
      return 3;
    case KodairaFamily::IV:
      return 4;
    case KodairaFamily::III:
      return 5;
    case KodairaFamily::II:
      return 6;
    case KodairaFamily::I:
      return 7;
  }
  return 8;
}

std::vector<std::pair<KodairaType, int>> display_order(const FiberMultiset& m) {
  std::vector<std::pair<KodairaType, int>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
    int ra = display_rank(a.first), rb = display_rank(b.first);
    return ra != rb ? ra < rb : a.first.n > b.first.n;
  });
  return v;
}

}  // namespace

PlaceValuation place_valuations(const WeierstrassModel& w, const Place& p) {
  Invariants inv = w.invariants();
  if (inv.disc.is_zero()) throw DegenerateModelError("discriminant vanishes identically");
  PlaceValuation v;
  v.data = analyze(inv, p);
  RatFn pi = p.infinity ? RatFn(MultiPoly(1), MultiPoly::var(Var::U)) : RatFn(p.poly);
  v.minimal = v.data.k == 0 ? w : w.transform(0, 0, 0, pi.pow(v.data.k));
  return v;
}

std::vector<LocalData> FiberConfiguration::fibers() const {
  std::vector<LocalData> out;
  for (auto& p : places)
    if (!p.type.smooth()) out.push_back(p);
  return out;
}

FiberMultiset FiberConfiguration::multiset() const {
  FiberMultiset m;
  for (auto& p : places)
    if (!p.type.smooth()) m[p.type] += p.count();
  return m;
}

int FiberConfiguration::euler_sum() const {
  int s = 0;
  for (auto& p : places) s += p.count() * p.type.euler();
  return s;
}

LocalData FiberConfiguration::at(const Place& p) const {
  for (auto& d : places) {
    if (d.place == p) return d;
    if (!p.infinity && !d.place.infinity && d.place.poly.divide_exact(p.poly)) {
      LocalData part = d;
      part.place = p;
      return part;
    }
  }
  LocalData d;
  d.place = p;
  return d;
}

std::string fiber_summary(const FiberMultiset& m) {
  std::ostringstream os;
  bool first = true;
  for (auto& [t, c] : display_order(m)) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c;
    os << t.name();
  }
  return first ? "none" : os.str();
}

std::string fiber_summary_latex(const FiberMultiset& m) {
  std::ostringstream os;
  bool first = true;
  for (auto& [t, c] : display_order(m)) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c;
    os << "\\mathrm{" << t.latex() << "}";
  }
  return os.str();
}

FiberMultiset parse_fiber_summary(const std::string& s) {
  static const std::regex term(R"(\s*(\d*)\s*((?:I\d+\*?)|II\*|III\*|IV\*|II|III|IV)\s*)");
  FiberMultiset m;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    std::smatch g;
    if (!std::regex_match(part, g, term)) throw ClassificationError("bad fiber term '" + part + "'");
    int c = g[1].length() ? std::stoi(g[1]) : 1;
    m[KodairaType::parse(g[2])] += c;
  }
  return m;
}

FiberConfiguration fiber_configuration(const WeierstrassModel& w, const std::vector<MultiPoly>& known) {
  Invariants inv = w.invariants();
  if (inv.disc.is_zero()) throw DegenerateModelError("discriminant vanishes identically");
  std::vector<MultiPoly> polys = known;
  for (const RatFn* f : {&inv.disc})
    for (const MultiPoly* p : {&f->num(), &f->den()}) {
      for (auto& s : squarefree_decomposition(*p, Var::U)) polys.push_back(s.factor);
    }
  for (const RatFn* f : {&inv.c4, &inv.c6})
    for (auto& s : squarefree_decomposition(f->den(), Var::U)) polys.push_back(s.factor);
  FiberConfiguration cfg;
  for (auto& base : places_of(polys))
    for (auto& p : refine(base, {inv.c4, inv.c6, inv.disc})) {
      LocalData d = analyze(inv, p);
      if (d.k != 0 || !d.type.smooth()) cfg.places.push_back(d);
    }
  LocalData inf = analyze(inv, Place::at_infinity());
  if (inf.k != 0 || !inf.type.smooth()) cfg.places.push_back(inf);
  return cfg;
}

}  // namespace kumfib
