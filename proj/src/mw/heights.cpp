#include "kumfib/mw/heights.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace kumfib {

int zero_intersection(const WeierstrassModel& w, const FiberConfiguration& cfg, const Point& p) {
  return zero_intersection(section_components(w, cfg, p));
}

int sec_intersection(const WeierstrassModel& w, const FiberConfiguration& cfg, const Point& p, const Point& q) {
  if (p == q) throw AlgebraError("(P.Q) needs distinct sections");
  return zero_intersection(w, cfg, add(w, p, negate(w, q)));
}

Rational height(const WeierstrassModel& w, const FiberConfiguration& cfg, const Point& p) {
  if (p.infinity) return 0;
  auto loc = section_components(w, cfg, p);
  Rational h = Rational(2 * kChi + 2 * zero_intersection(loc)) - total_contribution(loc);
  h.canonicalize();
  return h;
}

Rational height_pairing(const WeierstrassModel& w, const FiberConfiguration& cfg, const Point& p, const Point& q) {
  if (p == q) return height(w, cfg, p);
  Rational r = (height(w, cfg, p) + height(w, cfg, q) - height(w, cfg, add(w, p, negate(w, q)))) / 2;
  r.canonicalize();
  return r;
}

Rational determinant(Matrix m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  det.canonicalize();
  return det;
}

int matrix_rank(Matrix m) {
  int rank = 0;
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == static_cast<size_t>(rank) || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool GramMatrix::symmetric() const {
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (entries[i][j] != entries[j][i]) return false;
  return true;
}

bool GramMatrix::positive_definite() const {
  for (size_t k = 1; k <= entries.size(); ++k) {
    Matrix sub(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = entries[i][j];
    if (sgn(determinant(sub)) <= 0) return false;
  }
  return true;
}

std::string GramMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < entries.size(); ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < entries[i].size(); ++j) os << (j ? ", " : "") << entries[i][j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string GramMatrix::to_latex() const {
  std::ostringstream os;
  os << "\\begin{pmatrix}";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << " \\\\ ";
    for (size_t j = 0; j < entries[i].size(); ++j) {
      if (j) os << " & ";
      const Rational& q = entries[i][j];
      if (q.get_den() == 1)
        os << q.get_num().get_str();
      else
        os << (sgn(q) < 0 ? "-" : "") << "\\frac{" << Integer(abs(q.get_num())).get_str() << "}{" << q.get_den().get_str()
           << "}";
    }
  }
  os << "\\end{pmatrix}";
  return os.str();
}

GramMatrix gram_matrix(const WeierstrassModel& w, const FiberConfiguration& cfg, const SectionTable& sections,
                       const std::vector<std::string>& basis) {
  GramMatrix g;
  g.basis = basis;
  size_t n = basis.size();
  std::vector<Point> pts;
  for (auto& b : basis) {
    auto it = sections.find(b);
    if (it == sections.end()) throw AlgebraError("unknown section " + b);
    pts.push_back(it->second);
  }
  std::vector<Rational> h(n);
  for (size_t i = 0; i < n; ++i) h[i] = height(w, cfg, pts[i]);
  g.entries.assign(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) {
    g.entries[i][i] = h[i];
    for (size_t j = i + 1; j < n; ++j) {
      Rational d = height(w, cfg, add(w, pts[i], negate(w, pts[j])));
      Rational v = (h[i] + h[j] - d) / 2;
      v.canonicalize();
      g.entries[i][j] = g.entries[j][i] = v;
    }
  }
  return g;
}

Matrix standard_gram(const std::string& lattice) {
  Rational a(4, 3), b(2, 3);
  if (lattice == "0") return {};
  if (lattice == "Z") return {{1}};
  if (lattice == "Z^2") return {{1, 0}, {0, 1}};
  if (lattice == "A2*[2]") return {{a, b}, {b, a}};
  if (lattice == "(A2*[2])^2") return {{a, b, 0, 0}, {b, a, 0, 0}, {0, 0, a, b}, {0, 0, b, a}};
  throw AlgebraError("unknown lattice " + lattice);
}

std::string identify_lattice(const GramMatrix& g) {
  size_t n = g.entries.size();
  for (std::string name : {"0", "Z", "Z^2", "A2*[2]", "(A2*[2])^2"}) {
    Matrix s = standard_gram(name);
    if (s.size() != n) continue;
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (unsigned signs = 0; signs < (1u << n); ++signs) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
          for (size_t j = 0; j < n && ok; ++j) {
            int sign = (((signs >> i) ^ (signs >> j)) & 1) ? -1 : 1;
            ok = g.entries[perm[i]][perm[j]] * sign == s[i][j];
          }
        if (ok) return name;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return "";
}

std::string torsion_structure(const WeierstrassModel& w, const std::vector<Point>& torsion, int bound) {
  // enumerate the generated group (it is small)
  std::vector<Point> group{Point::zero()};
  auto contains = [&](const Point& p) { return std::find(group.begin(), group.end(), p) != group.end(); };
  int exponent = 1;
  for (auto& t : torsion) {
    int n = torsion_order(w, t, bound);
    if (n == 0) throw AlgebraError("section " + t.to_string() + " is not torsion of order <= " + std::to_string(bound));
    exponent = std::lcm(exponent, n);
    if (contains(t)) continue;
    std::vector<Point> next = group;
    Point m = t;
    while (!contains(m)) {
      for (auto& g : group) next.push_back(add(w, g, m));
      m = add(w, m, t);
    }
    group = std::move(next);
  }
  size_t order = group.size();
  if (order == 1) return "0";
  if (static_cast<size_t>(exponent) == order) return "Z/" + std::to_string(order);
  if (static_cast<size_t>(exponent) * exponent == order) return "(Z/" + std::to_string(exponent) + ")^2";
  return "Z/" + std::to_string(order / exponent) + " x Z/" + std::to_string(exponent);
}

int torsion_group_order(const std::string& s) {
  static const std::regex cyc(R"(Z/(\d+))"), sq(R"(\(Z/(\d+)\)\^2)"), prod(R"(Z/(\d+) x Z/(\d+))");
  std::smatch m;
  if (s == "0") return 1;
  if (std::regex_match(s, m, cyc)) return std::stoi(m[1]);
  if (std::regex_match(s, m, sq)) return std::stoi(m[1]) * std::stoi(m[1]);
  if (std::regex_match(s, m, prod)) return std::stoi(m[1]) * std::stoi(m[2]);
  throw AlgebraError("unknown torsion group " + s);
}

Relation parse_relation(const std::string& text) {
  Relation r;
  r.text = text;
  auto eq = text.find('=');
  if (eq == std::string::npos) throw AlgebraError("relation without '=': " + text);
  static const std::regex term(R"(\s*([+-]?)\s*(\d*)\s*([A-Za-z][A-Za-z0-9_']*)\s*)");
  auto side = [&](const std::string& s, std::map<std::string, long>& out) {
    auto it = std::sregex_iterator(s.begin(), s.end(), term);
    size_t consumed = 0;
    for (; it != std::sregex_iterator(); ++it) {
      auto& m = *it;
      if (static_cast<size_t>(m.position()) != consumed) throw AlgebraError("bad relation term in '" + s + "'");
      consumed += m.length();
      long c = m[2].length() ? std::stol(m[2]) : 1;
      if (m[1] == "-") c = -c;
      if (m[3] == "O") continue;
      out[m[3]] += c;
    }
    if (consumed != s.size()) throw AlgebraError("bad relation term in '" + s + "'");
  };
  side(text.substr(0, eq), r.lhs);
  side(text.substr(eq + 1), r.rhs);
  return r;
}

Point evaluate_sum(const WeierstrassModel& w, const SectionTable& s, const std::map<std::string, long>& sum) {
  Point acc = Point::zero();
  for (auto& [name, c] : sum) {
    auto it = s.find(name);
    if (it == s.end()) throw AlgebraError("unbound section label " + name);
    acc = add(w, acc, multiply(w, it->second, c));
  }
  return acc;
}

bool verify_relation(const WeierstrassModel& w, const SectionTable& s, const Relation& r) {
  return evaluate_sum(w, s, r.lhs) == evaluate_sum(w, s, r.rhs);
}

int shioda_tate_rank(const FiberConfiguration& cfg, int rho) {
  int trivial = 2;
  for (auto& f : cfg.fibers()) trivial += f.count() * (f.type.components() - 1);
  return rho - trivial;
}

Rational ns_discriminant(const FiberConfiguration& cfg, const Rational& gram_det, int torsion_order) {
  Rational d = gram_det;
  for (auto& f : cfg.fibers())
    for (int i = 0; i < f.count(); ++i) d *= f.type.lattice_det();
  d /= Rational(torsion_order) * torsion_order;
  d.canonicalize();
  return d;
}

}  // namespace kumfib
