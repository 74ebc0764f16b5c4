#include "smz/specials.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "smz/zeta.hpp"

namespace smz {

std::string PiPower::str() const {
  if (coeff == 0 || power == 0) return to_string(coeff);
  return to_string(coeff) + " pi^" + std::to_string(power);
}

PiPower operator+(const PiPower& a, const PiPower& b) {
  if (a.coeff == 0) return b;
  if (b.coeff == 0) return a;
  if (a.power != b.power) throw std::logic_error("PiPower: adding different powers of pi");
  return {a.coeff + b.coeff, a.power};
}

Real PiPower::approx() const { return to_real(coeff) * std::pow(std::numbers::pi_v<Real>, power); }

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  thread_local std::vector<Rational> B{Rational(1)};
  while (static_cast<int>(B.size()) <= n) {
    const int m = static_cast<int>(B.size());
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    Rational s = 0;
    Integer c = 1;
    for (int k = 0; k < m; ++k) {
      s += c * B[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    B.push_back(-s / (m + 1));
  }
  return B[n];
}

PiPower zeta_even_exact(int two_k) {
  if (two_k < 2 || two_k % 2) throw std::invalid_argument("zeta_even_exact: argument must be even and >= 2");
  const int k = two_k / 2;
  Integer fact = 1;
  for (int i = 2; i <= two_k; ++i) fact *= i;
  Rational c = bernoulli(two_k) * Rational(ipow(2, two_k)) / (2 * Rational(fact));
  if (k % 2 == 0) c = -c;
  return {c, two_k};
}

Integer centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  Integer z = 1;
  for (auto [i, m] : mult)
    for (int j = 1; j <= m; ++j) z *= i * j;
  return z;
}

namespace {

long mn(const std::vector<int>& lam, const std::vector<int>& mu, std::size_t at,
        std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo) {
  if (at == mu.size()) return lam.empty() ? 1 : 0;
  std::vector<int> rest(mu.begin() + static_cast<long>(at), mu.end());
  auto key = std::make_pair(lam, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // beta numbers b_i = lam_i + l - i, strictly decreasing
  const int l = static_cast<int>(lam.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lam[i] + l - 1 - i;
  const int r = mu[at];
  long total = 0;
  for (int i = 0; i < l; ++i) {
    int to = beta[i] - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta) between += b > to && b < beta[i];
    std::vector<int> nb = beta;
    nb[i] = to;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> next;
    for (int j = 0; j < l; ++j)
      if (int p = nb[j] - (l - 1 - j); p > 0) next.push_back(p);
    long v = mn(next, mu, at + 1, memo);
    total += between % 2 ? -v : v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("character: weight mismatch");
  thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
  return mn(lambda.parts(), mu.parts(), 0, memo);
}

PiPower smzv_constant_exact(const Partition& lambda, int two_k) {
  if (two_k < 2 || two_k % 2) throw std::invalid_argument("smzv_constant_exact: argument must be even and >= 2");
  if (two_k / 2 > kMaxConstantK || lambda.weight() > kMaxConstantWeight)
    throw std::out_of_range("smzv_constant_exact: beyond the default caps");
  const int n = lambda.weight();
  PiPower total{0, two_k * n};
  for (const auto& mu : partitions_of(n)) {
    long chi = character(lambda, mu);
    if (chi == 0) continue;
    PiPower term{Rational(chi) / Rational(centralizer_order(mu)), 0};
    for (int p : mu.parts()) term = term * zeta_even_exact(two_k * p);
    total = total + term;
  }
  if (total.coeff == 0) total.power = two_k * n;
  return total;
}

Scalar smzv_constant_series(const Partition& lambda, Real s, long N) {
  if (!(s > 1)) throw std::invalid_argument("smzv_constant_series: needs s > 1");
  SkewShape sh(lambda);
  Tableau<Real> t(sh, std::vector<Real>(sh.size(), s));
  return Scalar(smzv_trunc<Real>(t, N));
}

std::vector<ConstantTableRow> constant_table(int n, int kmax) {
  auto lams = partitions_of(n);
  std::sort(lams.begin(), lams.end(), [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
  std::vector<ConstantTableRow> rows;
  for (const auto& lam : lams) {
    ConstantTableRow r{lam, {}};
    for (int k = 1; k <= kmax; ++k) r.values.push_back(smzv_constant_exact(lam, 2 * k));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace smz
