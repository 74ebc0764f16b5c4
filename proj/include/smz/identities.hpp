#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "smz/enumerate.hpp"
#include "smz/scalar.hpp"
#include "smz/shapes.hpp"
#include "smz/zeta.hpp"

namespace smz {

using DiagMap = std::map<int, int>;

struct IdentityReport {
  std::string identity;
  std::string shape;
  DiagMap diag;
  DiagMap diag2;  // second map (dual Cauchy)
  long N = 0;
  long M = -1;
  Scalar lhs, rhs;
  bool equal = false;
  Real abs_diff = 0;

  nlohmann::json to_json() const;
};

IdentityReport make_report(std::string identity, std::string shape, const Scalar& lhs, const Scalar& rhs);

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free (Bareiss) elimination with row pivoting.
Rational determinant(Matrix<Rational> a);
// Partial pivoting.
Real determinant(Matrix<Real> a);

// Tuple a_{start}, a_{start+step}, ... of length len; throws on a missing index.
std::vector<int> diag_run(const DiagMap& a, int start, int step, int len);

// Jacobi-Trudi matrices for a skew shape with diagonal values a.
// H: entries zeta*^N(a_{mu_j-j+1}, ..., a_{mu_j-j+L}), L = lambda_i - mu_j - i + j.
// E: entries zeta^N(a_{-mu'_j+j-1}, a_{-mu'_j+j-2}, ...), L = lambda'_i - mu'_j - i + j.
// L = 0 gives 1 and L < 0 gives 0.
Matrix<Rational> jt_matrix(const SkewShape& s, const DiagMap& a, long N, RimKind kind);
IdentityReport jacobi_trudi(const SkewShape& s, const DiagMap& a, long N, RimKind kind);

// Hook (p, 1^q) filled with a_0..a_{p-1} along the row and a_{-1}..a_{-q} down the column.
Tableau<int> giambelli_hook(int p, int q, const DiagMap& a);
Matrix<Rational> giambelli_matrix(const Partition& lambda, const DiagMap& a, long N);
IdentityReport giambelli(const Partition& lambda, const DiagMap& a, long N);

// lambda* = (r - lambda'_s, ..., r - lambda'_1) for lambda inside (s^r).
Partition dual_cauchy_complement(const Partition& lambda, int r, int s);
Rational dual_cauchy_lhs(int r, int s, const DiagMap& c, const DiagMap& d, long N, long M);
Matrix<Rational> dual_cauchy_matrix(int r, int s, const DiagMap& c, const DiagMap& d, long N, long M);
IdentityReport dual_cauchy(int r, int s, const DiagMap& c, const DiagMap& d, long N, long M);

// Signed sum over rim decompositions of products of zeta*^N (H) or zeta^N (E) values.
Rational rim_expansion(const Tableau<int>& t, long N, RimKind kind);
IdentityReport rim_sum(const Partition& lambda, const DiagMap& a, long N, RimKind kind);

// Precomputed SSYT data for repeated direct sums over one shape and bound with
// varying diagonal values: each tableau reduces to the product of its entries on
// every diagonal.
class DiagonalDirectSum {
 public:
  DiagonalDirectSum(const SkewShape& s, int N);
  Rational operator()(const DiagMap& a) const;
  std::size_t classes() const { return weights_.size(); }

 private:
  int lo_ = 0;
  std::vector<std::pair<std::vector<std::uint64_t>, std::int64_t>> weights_;
};

// Every map from the content range of s to `values`.
std::vector<DiagMap> all_diagonal_maps(const SkewShape& s, const std::vector<int>& values);
std::vector<DiagMap> all_diagonal_maps(int lo, int hi, const std::vector<int>& values);

struct SweepSummary {
  std::int64_t instances = 0;
  std::int64_t failures = 0;
  std::vector<IdentityReport> failed;
};

// For every straight lambda of weight 1..max_weight, every diagonal map with
// entries in `values`, every N in Ns: H and E determinants against the direct sum.
SweepSummary jt_sweep(int max_weight, const std::vector<int>& values, const std::vector<int>& Ns,
                      const std::function<void(const IdentityReport&)>& sink = {});
const std::vector<SkewShape>& skew_battery();

// Independent unit of sweep work.
using SweepTask = std::function<std::vector<IdentityReport>()>;

// core, skew, giambelli, dual-cauchy, rim, full. Throws std::invalid_argument
// for an unknown name.
const std::vector<std::string>& suite_names();
std::vector<SweepTask> suite_tasks(const std::string& suite);
// Runs the tasks on up to `jobs` threads; reports come back in task order.
std::vector<IdentityReport> run_tasks(const std::vector<SweepTask>& tasks, int jobs);

}  // namespace smz
