#include "smz/zeta.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace smz {

Real tail_bound(const Tableau<Real>& t, long N) {
  const int depth = t.size();
  int logs = 0;
  for (Real v : t.values()) logs += v < 2;
  Real C = depth * std::pow(2.0L, depth - 1);
  return C * std::pow(1 + std::log(static_cast<Real>(N)), logs) / static_cast<Real>(N);
}

const std::vector<long>& escalation_schedule() {
  static const std::vector<long> s{1'000, 10'000, 100'000, 1'000'000};
  return s;
}

Estimate smzv_estimate(const Tableau<Real>& t, Real tol) {
  if (!in_region_W(t)) throw std::invalid_argument("smzv_estimate: tableau outside the convergence region");
  for (long N : escalation_schedule()) {
    Real b = tail_bound(t, N);
    if (b <= tol) {
      Real v = t.shape().is_ribbon() ? smzv_trunc_ribbon<Real>(t, N) : smzv_trunc<Real>(t, N);
      return {v, N, b};
    }
  }
  throw std::runtime_error("smzv_estimate: tolerance unreachable within resource cap");
}

Estimate smzv_estimate(const Tableau<int>& t, Real tol) {
  return smzv_estimate(map_values(t, [](int v) { return static_cast<Real>(v); }), tol);
}

namespace {

using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

Real fit_constant(const std::vector<long>& Ns, const std::vector<Real>& vals, int logpow) {
  const int rows = static_cast<int>(Ns.size());
  const int cols = 1 + 3 * (logpow + 1);
  Real Lmax = std::log(static_cast<Real>(Ns.back()));
  Mat A(rows, cols);
  Vec b(rows);
  for (int i = 0; i < rows; ++i) {
    Real N = static_cast<Real>(Ns[i]);
    Real u = std::log(N) / Lmax;
    A(i, 0) = 1;
    int c = 1;
    for (int j = 1; j <= 3; ++j)
      for (int k = 0; k <= logpow; ++k) A(i, c++) = std::pow(u, k) * std::pow(static_cast<Real>(Ns.front()) / N, j);
    b(i) = vals[i];
  }
  Vec x = A.colPivHouseholderQr().solve(b);
  return x(0);
}

}  // namespace

Extrapolation extrapolate_limit(const std::function<Real(long)>& S, long n_max, int logpow) {
  const int samples = 40;
  const Real span = 100;
  std::vector<long> Ns;
  for (int i = samples - 1; i >= 0; --i) {
    long N = std::lround(static_cast<Real>(n_max) / std::pow(span, static_cast<Real>(i) / (samples - 1)));
    if (Ns.empty() || N > Ns.back()) Ns.push_back(N);
  }
  std::vector<Real> vals;
  for (long N : Ns) vals.push_back(S(N));
  Extrapolation e;
  e.n_max = n_max;
  e.raw = vals.back();
  Real a = fit_constant(Ns, vals, logpow);
  Real b = fit_constant(Ns, vals, logpow + 1);
  e.value = a;
  e.error = std::abs(a - b);
  return e;
}

}  // namespace smz
