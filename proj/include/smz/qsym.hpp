#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "smz/enumerate.hpp"
#include "smz/identities.hpp"
#include "smz/scalar.hpp"
#include "smz/shapes.hpp"

namespace smz {

using Composition = std::vector<int>;

int weight(const Composition& c);
std::string str(const Composition& c);
std::vector<Composition> compositions_of(int n);
std::vector<Composition> coarsenings(const Composition& c);  // adjacent merges, c included
std::vector<Composition> refinements(const Composition& c);

// Weight first, then lexicographic.
struct GradedLex {
  bool operator()(const Composition& a, const Composition& b) const;
};

// Element of QSym in monomial coordinates.
class QSym {
 public:
  using Terms = std::map<Composition, Integer, GradedLex>;

  QSym() = default;
  static QSym unit() { return M({}); }
  static QSym M(const Composition& c, Integer coeff = 1);

  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  void add(const Composition& c, const Integer& coeff);

  QSym& operator+=(const QSym& o);
  QSym& operator-=(const QSym& o);
  friend QSym operator+(QSym a, const QSym& b) { return a += b; }
  friend QSym operator-(QSym a, const QSym& b) { return a -= b; }
  friend QSym operator-(QSym a);
  friend QSym operator*(const Integer& k, QSym a);
  friend QSym operator*(const QSym& a, const QSym& b);  // quasi-shuffle
  friend bool operator==(const QSym& a, const QSym& b) { return a.terms_ == b.terms_; }

  std::string str() const;  // "M[2,1] - 2 M[3]"
  nlohmann::json to_json() const;

 private:
  Terms terms_;
};

QSym parse_qsym(const std::string& text);  // sums of k M[..], E[..] or F[..]

QSym monomial(const Composition& c);
QSym essential(const Composition& c);
QSym fundamental(const Composition& c);
QSym quasi_shuffle(const QSym& a, const QSym& b);

// Sum of M over the direct blockings of the tableau.
QSym schur_qsym(const Tableau<int>& t);
// Signed E form over conjugate-rule blockings.
QSym schur_qsym_signed_E(const Tableau<int>& t);
// Signed sums over H-rims (E products) and E-rims (M products). They equal
// schur_qsym when the tableau is diagonal.
QSym schur_rim_H(const Tableau<int>& t);
QSym schur_rim_E(const Tableau<int>& t);

// S(M_g) = (-1)^n E_{reverse g}
QSym antipode(const QSym& x);
// S(M_g) = sum over splittings g = g_1 ... g_m of (-1)^m M_{g_1} * ... * M_{g_m}
QSym antipode_by_splitting(const QSym& x);

// Polynomial in t_1..t_N with total degree <= D.
class TruncatedPoly {
 public:
  TruncatedPoly(int N, int D) : N_(N), D_(D) {}
  int vars() const { return N_; }
  int degree_cap() const { return D_; }
  const std::map<std::vector<int>, Integer>& terms() const { return terms_; }
  void add(const std::vector<int>& exps, const Integer& c);
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);
  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
    return a.N_ == b.N_ && a.D_ == b.D_ && a.terms_ == b.terms_;
  }

 private:
  int N_, D_;
  std::map<std::vector<int>, Integer> terms_;
};

TruncatedPoly realize(const QSym& x, int N, int D);
// t_i -> 1/i
Rational rho_N(const QSym& x, long N);

// Laplace expansion with memo on column subsets; for small matrices over a commutative ring.
QSym determinant(const Matrix<QSym>& m);

struct QSymReport {
  std::string identity;
  std::string shape;
  std::vector<std::pair<std::string, QSym>> sides;
  bool equal = false;
  nlohmann::json to_json() const;
};
QSymReport make_qsym_report(std::string identity, std::string shape, std::vector<std::pair<std::string, QSym>> sides);

// S(S_nu(g)) against (-1)^{|nu|} S_{nu#}(g#) and, for diagonal g, both rim sums on nu#.
QSymReport antipode_schur_identity(const Tableau<int>& t);
// Both antipode formulas on M_c.
QSymReport antipode_formulas(const Composition& c);

Matrix<QSym> jt_quasi_matrix(const SkewShape& s, const DiagMap& c, RimKind kind);
QSymReport jt_quasi(const SkewShape& s, const DiagMap& c, RimKind kind);
QSymReport giambelli_quasi(const Partition& lambda, const DiagMap& c);
QSymReport dual_cauchy_quasi(int r, int s, const DiagMap& c, const DiagMap& d);
// Antipode image of the dual Cauchy identity, sum over lambda inside (r^s).
QSymReport dual_cauchy_antipode(int r, int s, const DiagMap& c, const DiagMap& d);
// M_g as a determinant in E entries, E_g as one in M entries, and the splitting sums.
QSymReport m_by_e(const Composition& g);
QSymReport e_by_m(const Composition& g);

}  // namespace smz
