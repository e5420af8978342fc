#pragma once

#include <map>
#include <string>
#include <vector>

#include "kumfib/local/section.hpp"

namespace kumfib {

// Heights use the normalization <P,P> = 2chi + 2(P.O) - sum contr_v(P) with chi = 2.
inline constexpr int kChi = 2;

int zero_intersection(const WeierstrassModel& w, const FiberConfiguration& cfg, const Point& p);
// (P.Q) for P != Q, computed as ((P - Q).O)
int sec_intersection(const WeierstrassModel& w, const FiberConfiguration& cfg, const Point& p, const Point& q);
Rational height(const WeierstrassModel& w, const FiberConfiguration& cfg, const Point& p);
Rational height_pairing(const WeierstrassModel& w, const FiberConfiguration& cfg, const Point& p, const Point& q);

using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix m);
int matrix_rank(Matrix m);

struct GramMatrix {
  std::vector<std::string> basis;
  Matrix entries;
  Rational det() const { return determinant(entries); }
  bool symmetric() const;
  bool positive_definite() const;  // leading principal minors
  std::string to_string() const;
  std::string to_latex() const;
};

using SectionTable = std::map<std::string, Point>;

GramMatrix gram_matrix(const WeierstrassModel& w, const FiberConfiguration& cfg, const SectionTable& sections,
                       const std::vector<std::string>& basis);

// Name among "0", "Z", "Z^2", "A2*[2]", "(A2*[2])^2" when the Gram matrix equals the standard
// one up to permuting and negating basis vectors; empty otherwise.
std::string identify_lattice(const GramMatrix& g);
Matrix standard_gram(const std::string& lattice);

// Group generated by the given torsion points: "0", "Z/2", "(Z/2)^2", "Z/n", ...
// Throws if a point is not torsion within the bound.
std::string torsion_structure(const WeierstrassModel& w, const std::vector<Point>& torsion, int bound = 12);
int torsion_group_order(const std::string& structure);

// "P3 = P2 + T", "2P1 - P4 = O"; coefficients are integers, O is the zero section
struct Relation {
  std::map<std::string, long> lhs, rhs;
  std::string text;
};
Relation parse_relation(const std::string& text);
Point evaluate_sum(const WeierstrassModel& w, const SectionTable& s, const std::map<std::string, long>& sum);
bool verify_relation(const WeierstrassModel& w, const SectionTable& s, const Relation& r);

// rho = 2 + sum (m_v - 1) + rank
int shioda_tate_rank(const FiberConfiguration& cfg, int picard_number);
// |det NS| = det(Gram) * prod det(root lattices) / |tors|^2
Rational ns_discriminant(const FiberConfiguration& cfg, const Rational& gram_det, int torsion_order);

}  // namespace kumfib
