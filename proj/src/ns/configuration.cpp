#include "kumfib/ns/configuration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace kumfib {

namespace {

Curve pullback(std::string name, int a, int b, const std::vector<std::pair<RPoint, int>>& points) {
  Curve c;
  c.kind = Curve::Kind::Pullback;
  c.a = a;
  c.b = b;
  for (auto& [p, m] : points) c.mult[p.i][p.j] = m;
  c.name = std::move(name);
  return c;
}

void check_general_position(const std::vector<RPoint>& markers) {
  for (size_t x = 0; x < markers.size(); ++x) {
    auto& p = markers[x];
    if (p.i < 0 || p.i > 3 || p.j < 0 || p.j > 3) throw ConfigurationError("R-point index out of range: " + p.to_string());
    for (size_t y = 0; y < x; ++y)
      if (markers[y].i == p.i || markers[y].j == p.j)
        throw ConfigurationError("R" + markers[y].to_string() + " and R" + p.to_string() + " share a line");
  }
}

Curve l11(std::vector<RPoint> markers) {
  check_general_position(markers);
  if (markers.size() != 3) throw ConfigurationError("a (1,1)-curve needs three R-points");
  std::vector<std::pair<RPoint, int>> pts;
  for (auto& m : markers) pts.push_back({m, 1});
  return pullback(l11_name(markers), 1, 1, pts);
}

const std::map<std::string, std::vector<RPoint>>& b_curves() {
  static const std::map<std::string, std::vector<RPoint>> m = {
      {"B32", {{0, 0}, {1, 1}, {2, 3}}}, {"B33", {{0, 0}, {1, 1}, {2, 2}}}, {"B22", {{0, 0}, {1, 1}, {3, 3}}},
      {"B23", {{0, 0}, {1, 1}, {3, 2}}}, {"B31", {{0, 0}, {1, 3}, {2, 2}}}, {"B12", {{0, 0}, {2, 3}, {3, 1}}},
      {"B13", {{0, 0}, {2, 2}, {3, 1}}}};
  return m;
}

// (2,2)-curves with a node at R00
Curve p_curve(const std::string& name) {
  if (name == "P33")
    return pullback(name, 2, 2, {{{0, 0}, 2}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}, {{2, 3}, 1}, {{3, 1}, 1}});
  if (name == "P32")
    return pullback(name, 2, 2, {{{0, 0}, 2}, {{1, 1}, 1}, {{1, 3}, 1}, {{2, 2}, 1}, {{2, 3}, 1}, {{3, 1}, 1}});
  throw ConfigurationError("unknown curve " + name);
}

}  // namespace

std::string l11_name(std::vector<RPoint> markers) {
  std::sort(markers.begin(), markers.end());
  std::string s = "L(";
  for (size_t k = 0; k < markers.size(); ++k) s += (k ? "," : "") + markers[k].to_string();
  return s + ")";
}

Curve curve(const std::string& name) {
  static const std::regex basic(R"(([AFG])([0-3])([0-3])?)"), lre(R"(L\(([0-3])([0-3]),([0-3])([0-3]),([0-3])([0-3])\))");
  std::smatch m;
  if (std::regex_match(name, m, basic)) {
    Curve c;
    c.name = name;
    char k = m.str(1)[0];
    bool two = m[3].matched;
    if ((k == 'A') != two) throw ConfigurationError("unknown curve " + name);
    if (k == 'A') {
      c.kind = Curve::Kind::A;
      c.i = std::stoi(m[2]);
      c.j = std::stoi(m[3]);
    } else if (k == 'F') {
      c.kind = Curve::Kind::F;
      c.i = std::stoi(m[2]);
    } else {
      c.kind = Curve::Kind::G;
      c.j = std::stoi(m[2]);
    }
    return c;
  }
  if (std::regex_match(name, m, lre)) {
    std::vector<RPoint> pts;
    for (int k = 0; k < 3; ++k) pts.push_back({std::stoi(m[1 + 2 * k]), std::stoi(m[2 + 2 * k])});
    return l11(pts);
  }
  auto it = b_curves().find(name);
  if (it != b_curves().end()) {
    Curve c = l11(it->second);
    c.name = name;
    return c;
  }
  return p_curve(name);
}

int intersect(const Curve& c, const Curve& d) {
  using K = Curve::Kind;
  if (c.kind == K::Pullback && d.kind == K::Pullback) {
    int s = 2 * (c.a * d.b + d.a * c.b);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s -= 2 * c.mult[i][j] * d.mult[i][j];
    return s;
  }
  if (d.kind == K::Pullback) return intersect(d, c);
  if (c.kind == K::Pullback) {
    switch (d.kind) {
      case K::A:
        return 2 * c.mult[d.i][d.j];
      case K::F: {
        int s = c.b;
        for (int j = 0; j < 4; ++j) s -= c.mult[d.i][j];
        return s;
      }
      case K::G: {
        int s = c.a;
        for (int i = 0; i < 4; ++i) s -= c.mult[i][d.j];
        return s;
      }
      default:
        break;
    }
  }
  if (c.kind == d.kind) {
    bool same = c.i == d.i && c.j == d.j;
    return same ? -2 : 0;
  }
  if (c.kind == K::A || d.kind == K::A) {
    const Curve& a = c.kind == K::A ? c : d;
    const Curve& o = c.kind == K::A ? d : c;
    return o.kind == K::F ? (a.i == o.i) : (a.j == o.j);
  }
  return 0;  // F . G
}

const std::vector<Curve>& model_curves() {
  static const std::vector<Curve> all = [] {
    std::vector<Curve> v;
    for (int i = 0; i < 4; ++i) {
      v.push_back(curve("F" + std::to_string(i)));
      v.push_back(curve("G" + std::to_string(i)));
      for (int j = 0; j < 4; ++j) v.push_back(curve("A" + std::to_string(i) + std::to_string(j)));
    }
    std::vector<RPoint> pts;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) pts.push_back({i, j});
    for (size_t x = 0; x < pts.size(); ++x)
      for (size_t y = x + 1; y < pts.size(); ++y)
        for (size_t z = y + 1; z < pts.size(); ++z) {
          std::vector<RPoint> m{pts[x], pts[y], pts[z]};
          bool ok = true;
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < a; ++b) ok = ok && m[a].i != m[b].i && m[a].j != m[b].j;
          if (ok) v.push_back(l11(m));
        }
    v.push_back(p_curve("P33"));
    v.push_back(p_curve("P32"));
    return v;
  }();
  return all;
}

Divisor Divisor::parse(const std::string& text) {
  static const std::regex term(R"(\s*(\d*)\s*\*?\s*([A-Z]\w*(?:\([0-9,]+\))?)\s*)");
  Divisor d;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '+')) {
    std::smatch m;
    if (!std::regex_match(part, m, term)) throw ConfigurationError("bad divisor term '" + part + "'");
    int c = m[1].length() ? std::stoi(m[1]) : 1;
    d.add(m[2], c);
  }
  return d;
}

void Divisor::add(const std::string& name, int multiplicity) {
  Curve c = curve(name);  // validates
  std::string key = c.kind == Curve::Kind::Pullback && name[0] == 'L' ? c.name : name;
  terms_[key] += multiplicity;
  if (terms_[key] == 0) terms_.erase(key);
}

std::string Divisor::to_string() const {
  std::string s;
  for (auto& [n, m] : terms_) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m);
    s += n;
  }
  return s.empty() ? "0" : s;
}

int Divisor::dot(const Curve& c) const {
  int s = 0;
  for (auto& [n, m] : terms_) s += m * intersect(curve(n), c);
  return s;
}

int operator*(const Divisor& d, const Divisor& e) {
  int s = 0;
  for (auto& [n, m] : e.terms_) s += m * d.dot(curve(n));
  return s;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor d = *this;
  for (auto& [n, m] : o.terms_) d.add(n, m);
  return d;
}

KodairaType classify_divisor(const Divisor& d) {
  auto fail = [&](const std::string& why) { return ConfigurationError("not a fiber: " + d.to_string() + ": " + why); };
  std::vector<std::string> names;
  std::vector<Curve> cs;
  std::vector<int> mult;
  for (auto& [n, m] : d.terms()) {
    if (m <= 0) throw fail("multiplicities must be positive");
    names.push_back(n);
    cs.push_back(curve(n));
    mult.push_back(m);
  }
  size_t n = cs.size();
  if (n < 2) throw fail("a fiber needs at least two components");
  if (d * d != 0) throw fail("self-intersection " + std::to_string(d * d));
  for (auto& c : model_curves())
    if (d.dot(c) < 0) throw fail("negative intersection with " + c.name);
  int g = 0;
  for (int m : mult) g = std::gcd(g, m);
  if (g != 1) throw fail("multiplicities are not primitive");
  for (size_t k = 0; k < n; ++k)
    if (d.dot(cs[k]) != 0) throw fail("meets its component " + names[k]);
  // dual graph
  std::vector<std::vector<size_t>> adj(n);
  size_t edges = 0;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y) {
      int e = intersect(cs[x], cs[y]);
      if (e < 0) throw fail("negative intersection between components");
      if (e == 2 && n == 2) return KodairaType::I(2);
      if (e > 1) throw fail(names[x] + " and " + names[y] + " meet " + std::to_string(e) + " times");
      if (e == 1) {
        adj[x].push_back(y);
        adj[y].push_back(x);
        ++edges;
      }
    }
  std::vector<bool> seen(n);
  std::function<void(size_t)> dfs = [&](size_t v) {
    seen[v] = true;
    for (size_t w : adj[v])
      if (!seen[w]) dfs(w);
  };
  dfs(0);
  if (std::count(seen.begin(), seen.end(), false)) throw fail("support is not connected");
  if (edges == n) {
    for (auto& a : adj)
      if (a.size() != 2) throw fail("cycle with a branch");
    return KodairaType::I(static_cast<int>(n));
  }
  if (edges != n - 1) throw fail("dual graph has several cycles");
  std::vector<size_t> branch;
  for (size_t v = 0; v < n; ++v) {
    if (adj[v].size() > 4) throw fail("vertex of degree > 4");
    if (adj[v].size() >= 3) branch.push_back(v);
  }
  if (branch.size() == 1 && adj[branch[0]].size() == 4) {
    if (n != 5) throw fail("star with long arms");
    return KodairaType::Istar(0);
  }
  if (branch.size() == 2) return KodairaType::Istar(static_cast<int>(n) - 5);
  if (branch.size() != 1) throw fail("no affine Dynkin shape");
  // arm lengths from the branch vertex
  std::vector<int> arms;
  for (size_t start : adj[branch[0]]) {
    int len = 1;
    size_t prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms == std::vector<int>{2, 2, 2}) return {KodairaFamily::IVstar, 0};
  if (arms == std::vector<int>{1, 3, 3}) return {KodairaFamily::IIIstar, 0};
  if (arms == std::vector<int>{1, 2, 5}) return {KodairaFamily::IIstar, 0};
  throw fail("no affine Dynkin shape");
}

PairCheck fiber_pair_check(const Divisor& d0, const Divisor& dinf) {
  PairCheck r;
  r.disjoint_support = true;
  for (auto& [n, m] : d0.terms())
    if (dinf.terms().count(n)) r.disjoint_support = false;
  r.product = d0 * dinf;
  for (auto& c : model_curves())
    if (d0.dot(c) != dinf.dot(c)) r.separating.push_back(c.name);
  return r;
}

int genus_pullback(const std::vector<RPoint>& markers) {
  check_general_position(markers);
  if (markers.size() < 2 || markers.size() > 3) throw ConfigurationError("genus_pullback takes two or three R-points");
  // a (1,1)-curve meets F0+..+F3 and G0+..+G3 in four points each; a marker absorbs one of each
  int ramification = 8 - 2 * static_cast<int>(markers.size());
  // Hurwitz for a double cover of P1: 2g - 2 = 2(-2) + r
  return (ramification - 2) / 2;
}

}  // namespace kumfib
