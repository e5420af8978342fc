#include "kumfib/weierstrass/iso.hpp"

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "kumfib/algebra/gcd.hpp"
#include "kumfib/local/fibers.hpp"

namespace kumfib {

BaseMap BaseMap::mobius(FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
  if ((a * d - b * c).is_zero()) throw AlgebraError("base map is constant");
  BaseMap m;
  m.a = std::move(a);
  m.b = std::move(b);
  m.c = std::move(c);
  m.d = std::move(d);
  return m;
}

BaseMap BaseMap::power_map(int n) {
  if (n == 0) throw AlgebraError("base map is constant");
  BaseMap m;
  m.power = n;
  return m;
}

RatFn BaseMap::to_ratfn() const {
  RatFn u = RatFn::var(Var::U);
  if (power != 0) return u.pow(power);
  return (RatFn(a) * u + RatFn(b)) / (RatFn(c) * u + RatFn(d));
}

std::string BaseMap::to_string() const { return "u -> " + to_ratfn().to_string(); }

RatFn compose(const RatFn& f, const BaseMap& phi) { return f.substitute(Var::U, phi.to_ratfn()); }

WeierstrassModel base_change(const WeierstrassModel& w, const BaseMap& phi) {
  return w.substitute(Var::U, phi.to_ratfn());
}

std::string to_string(IsoFamily f) {
  switch (f) {
    case IsoFamily::Auto:
      return "auto";
    case IsoFamily::Scaling:
      return "u -> c*u";
    case IsoFamily::ZeroInfinity:
      return "u -> c*u, u -> c/u";
    case IsoFamily::Affine:
      return "u -> c*u + b";
  }
  return "?";
}

namespace {

struct Positions {
  // finite part as a monic polynomial in u, and whether infinity carries the type
  std::map<KodairaType, std::pair<MultiPoly, bool>> by_type;
  FiberMultiset multiset;
};

Positions positions(const WeierstrassModel& w) {
  auto cfg = fiber_configuration(w);
  Positions p;
  for (auto& f : cfg.fibers()) {
    auto& e = p.by_type.try_emplace(f.type, MultiPoly(1), false).first->second;
    if (f.place.infinity)
      e.second = true;
    else
      e.first *= f.place.poly;
  }
  p.multiset = cfg.multiset();
  return p;
}

std::vector<FieldElement> dense(const MultiPoly& p) {
  if (p.variables() & ~(1u << static_cast<int>(Var::U)))
    throw AlgebraError("iso_test needs models over a constant field: " + p.to_string());
  return to_dense(p, Var::U);
}

// constraints c^e = r on the scale factor
struct Constraints {
  std::vector<std::pair<long, FieldElement>> list;
  bool bad = false;

  void add(long e, FieldElement r) {
    if (e < 0) {
      e = -e;
      r = r.inverse();
    }
    if (e == 0) {
      if (!r.is_one()) bad = true;
      return;
    }
    list.emplace_back(e, std::move(r));
  }

  // p1(c u) proportional to p2(u)
  void proportional(const MultiPoly& p1, const MultiPoly& p2) {
    auto a = dense(p1), b = dense(p2);
    if (a.size() != b.size()) {
      bad = true;
      return;
    }
    long m = static_cast<long>(a.size()) - 1;
    for (long k = 0; k <= m; ++k) {
      if (a[k].is_zero() != b[k].is_zero()) {
        bad = true;
        return;
      }
      if (!a[k].is_zero()) add(k - m, (b[k] * a[m]) / (b[m] * a[k]));
    }
  }

  // f1(c u) = f2(u)
  void equal(const RatFn& f1, const RatFn& f2) {
    proportional(f1.den(), f2.den());
    if (bad) return;
    auto n1 = dense(f1.num()), n2 = dense(f2.num());
    auto d1 = dense(f1.den()), d2 = dense(f2.den());
    if (n1.size() != n2.size()) {
      bad = true;
      return;
    }
    long dd = static_cast<long>(d1.size()) - 1;
    for (size_t k = 0; k < n1.size(); ++k) {
      if (n1[k].is_zero() != n2[k].is_zero()) {
        bad = true;
        return;
      }
      if (!n1[k].is_zero()) add(static_cast<long>(k) - dd, n2[k] * d1[dd] / (n1[k] * d2[dd]));
    }
  }

  // c^g = rho, g = 0 when c is free; nullopt when inconsistent
  std::optional<std::pair<long, FieldElement>> solve() const {
    if (bad) return std::nullopt;
    long g = 0;
    FieldElement rho = 1;
    for (auto& [e, r] : list) {
      if (g == 0) {
        g = e;
        rho = r;
        continue;
      }
      // x g + y e = h
      long x0 = 1, y0 = 0, x1 = 0, y1 = 1, a = g, b = e;
      while (b != 0) {
        long q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
      }
      rho = rho.pow(x0) * r.pow(y0);
      g = a;
    }
    for (auto& [e, r] : list)
      if (r != rho.pow(e / g)) return std::nullopt;
    return std::make_pair(g, rho);
  }
};

std::string scale_text(const std::pair<long, FieldElement>& s) {
  if (s.first == 0) return "any c";
  if (s.first == 1) return "c = " + s.second.to_string();
  return "c^" + std::to_string(s.first) + " = " + s.second.to_string();
}

struct ScalingOutcome {
  bool j_match = false;
  std::optional<std::pair<long, FieldElement>> scale;
  std::string reason;
};

ScalingOutcome scaling_test(const RatFn& j1, const RatFn& j2, const Positions& p1, const Positions& p2) {
  ScalingOutcome out;
  Constraints c;
  if (!j1.is_constant()) c.equal(j1, j2);
  if (!c.solve()) {
    out.reason = "no scaling carries one J-invariant to the other";
    return out;
  }
  out.j_match = true;
  for (auto& [type, e1] : p1.by_type) {
    auto it = p2.by_type.find(type);
    if (it == p2.by_type.end() || it->second.second != e1.second) {
      out.reason = type.name() + " fibers are not carried to " + type.name() + " fibers";
      return out;
    }
    c.proportional(e1.first, it->second.first);
    if (!c.solve()) {
      out.reason = "J matches but the " + type.name() + " fiber positions do not correspond";
      return out;
    }
  }
  out.scale = c.solve();
  return out;
}

// u -> u + beta moving the roots of p to mean zero
FieldElement centering_shift(const MultiPoly& p) {
  auto d = dense(p);
  long n = static_cast<long>(d.size()) - 1;
  return -d[n - 1] / (d[n] * FieldElement(n));
}

}  // namespace

IsoResult iso_test(const WeierstrassModel& w1, const WeierstrassModel& w2, IsoFamily family) {
  IsoResult res;
  RatFn j1 = w1.j_invariant(), j2 = w2.j_invariant();
  Positions p1 = positions(w1), p2 = positions(w2);
  res.family = family;
  if (j1.is_constant() != j2.is_constant() || (j1.is_constant() && j1 != j2)) {
    res.exhaustive = true;
    res.reason = "J differs: " + j1.to_string() + " vs " + j2.to_string();
    return res;
  }
  if (p1.multiset != p2.multiset) {
    res.exhaustive = true;
    res.j_match = j1.is_constant();
    res.reason = "fiber types differ: " + fiber_summary(p1.multiset) + " vs " + fiber_summary(p2.multiset);
    return res;
  }
  if (family == IsoFamily::Auto) {
    family = IsoFamily::Scaling;
    MultiPoly u = MultiPoly::var(Var::U);
    for (auto& [type, e1] : p1.by_type) {
      auto& e2 = p2.by_type.at(type);
      if (e1.second && e2.second && e1.first.is_constant() && e2.first.is_constant()) {
        family = IsoFamily::Affine;
        res.exhaustive = true;
        break;
      }
      if (e1.second && e2.second && e1.first == u && e2.first == u) {
        family = IsoFamily::ZeroInfinity;
        res.exhaustive = true;
      }
    }
    res.family = family;
  }

  auto attempt = [&](const RatFn& a, const RatFn& b, const Positions& q1, const Positions& q2,
                     const std::string& form) {
    auto out = scaling_test(a, b, q1, q2);
    res.j_match = res.j_match || out.j_match;
    if (out.scale) {
      res.isomorphic = true;
      res.witness = form + " with " + scale_text(*out.scale);
      res.reason = "J and all singular fiber positions correspond";
    } else if (res.reason.empty() || out.j_match) {
      res.reason = out.reason;
    }
    return out.scale.has_value();
  };

  switch (family) {
    case IsoFamily::Auto:
    case IsoFamily::Scaling:
      attempt(j1, j2, p1, p2, "u -> c*u");
      break;
    case IsoFamily::ZeroInfinity: {
      if (attempt(j1, j2, p1, p2, "u -> c*u")) break;
      BaseMap inv = BaseMap::inversion();
      WeierstrassModel v1 = base_change(w1, inv);
      attempt(compose(j1, inv), j2, positions(v1), p2, "u -> c/u");
      break;
    }
    case IsoFamily::Affine: {
      const MultiPoly* anchor1 = nullptr;
      const MultiPoly* anchor2 = nullptr;
      for (auto& [type, e1] : p1.by_type) {
        auto& e2 = p2.by_type.at(type);
        if (e1.first.degree(Var::U) > 0 && e1.first.degree(Var::U) == e2.first.degree(Var::U)) {
          anchor1 = &e1.first;
          anchor2 = &e2.first;
          break;
        }
      }
      if (!anchor1) {
        res.exhaustive = false;
        attempt(j1, j2, p1, p2, "u -> c*u");
        break;
      }
      FieldElement b1 = centering_shift(*anchor1), b2 = centering_shift(*anchor2);
      // centered anchors are related by a pure scaling
      BaseMap t1 = BaseMap::mobius(1, b1, 0, 1), t2 = BaseMap::mobius(1, b2, 0, 1);
      WeierstrassModel v1 = base_change(w1, t1), v2 = base_change(w2, t2);
      std::string form = "u -> c*(u - (" + b2.to_string() + ")) + (" + b1.to_string() + ")";
      attempt(compose(j1, t1), compose(j2, t2), positions(v1), positions(v2), form);
      break;
    }
  }
  return res;
}

}  // namespace kumfib
