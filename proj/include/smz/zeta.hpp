#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "smz/enumerate.hpp"
#include "smz/scalar.hpp"
#include "smz/shapes.hpp"

namespace smz {

namespace detail {

// f_1(m) = m^{-s_1}; f_k(m) = m^{-s_k} * sum_{m' < m or m' <= m} f_{k-1}(m'); result sum_m f_n(m).
template <class T, class E>
T nested_sum(const std::vector<E>& s, long N, bool star) {
  if (s.empty()) return T(1);
  if (N <= 0) return T(0);
  std::vector<T> f(static_cast<std::size_t>(N) + 1, T(0));
  for (long m = 1; m <= N; ++m) f[m] = inv_pow<T>(m, s[0]);
  for (std::size_t k = 1; k < s.size(); ++k) {
    T run = 0;
    for (long m = 1; m <= N; ++m) {
      if (star) run += f[m];
      T prev = run;
      if (!star) run += f[m];
      f[m] = inv_pow<T>(m, s[k]) * prev;
    }
  }
  T total = 0;
  for (long m = 1; m <= N; ++m) total += f[m];
  return total;
}

}  // namespace detail

// sum over m_1 < ... < m_n <= N of prod m_i^{-s_i}; empty tuple gives 1.
template <class T, class E>
T mzv_trunc(const std::vector<E>& s, long N) {
  return detail::nested_sum<T>(s, N, false);
}

// Same with m_1 <= ... <= m_n.
template <class T, class E>
T mzsv_trunc(const std::vector<E>& s, long N) {
  return detail::nested_sum<T>(s, N, true);
}

template <class T, class E>
T smzv_direct(const Tableau<E>& t, int N) {
  T total = 0;
  for_each_ssyt(t.shape(), N, [&](const std::vector<int>& m) {
    T w = 1;
    for (int k = 0; k < t.size(); ++k) w *= inv_pow<T>(m[k], t[k]);
    total += w;
  });
  return total;
}

template <class E>
struct SignedArgs {
  int sign = 1;
  std::vector<E> args;
};

enum class ExpandVariant { mzv, mzsv };

// mzv: zeta_lambda(s) = sum over t < s of zeta(t).
// mzsv: zeta_lambda(s) = sum over conjugate-rule blockings of (-1)^{n - l(t)} zeta*(t).
template <class E>
std::vector<SignedArgs<E>> smzv_expand(const Tableau<E>& t, ExpandVariant v) {
  auto seqs = preceq_set(t.shape(), v == ExpandVariant::mzv ? Variant::direct : Variant::conjugate);
  std::vector<SignedArgs<E>> out;
  for (const auto& b : seqs) {
    SignedArgs<E> a;
    a.sign = b.sign;
    for (const auto& block : b.blocks) {
      E sum = 0;
      for (int k : block) sum += t[k];
      a.args.push_back(sum);
    }
    out.push_back(std::move(a));
  }
  return out;
}

template <class T, class E>
T smzv_trunc(const Tableau<E>& t, long N) {
  T total = 0;
  for (const auto& a : smzv_expand(t, ExpandVariant::mzv)) total += mzv_trunc<T>(a.args, N);
  return total;
}

template <class T, class E>
T smzv_trunc_star(const Tableau<E>& t, long N) {
  T total = 0;
  for (const auto& a : smzv_expand(t, ExpandVariant::mzsv)) {
    T v = mzsv_trunc<T>(a.args, N);
    if (a.sign > 0)
      total += v;
    else
      total -= v;
  }
  return total;
}

// Chain recursion along a ribbon: O(N * cells). Cells further left satisfy
// m <= m_prev, cells further down satisfy m > m_prev.
template <class T, class E>
T smzv_trunc_ribbon(const Tableau<E>& t, long N) {
  auto ch = ribbon_chain(t.shape());
  if (!ch) throw std::invalid_argument("smzv_trunc_ribbon: shape is not a ribbon");
  if (N <= 0) return T(0);
  // one table of m^{-s} per distinct exponent
  std::vector<std::pair<E, std::vector<T>>> tables;
  auto powers = [&](const E& s) -> const std::vector<T>& {
    for (const auto& [e, v] : tables)
      if (e == s) return v;
    std::vector<T> v(static_cast<std::size_t>(N) + 1);
    for (long m = 1; m <= N; ++m) v[m] = inv_pow<T>(m, s);
    tables.emplace_back(s, std::move(v));
    return tables.back().second;
  };
  for (Cell c : ch->cells) powers(t.at(c));
  std::vector<T> f = powers(t.at(ch->cells[0]));
  for (std::size_t k = 1; k < ch->cells.size(); ++k) {
    const auto& p = powers(t.at(ch->cells[k]));
    if (ch->left_step[k - 1]) {
      T run = 0;
      for (long m = N; m >= 1; --m) {
        run += f[m];
        f[m] = p[m] * run;
      }
    } else {
      T run = 0;
      for (long m = 1; m <= N; ++m) {
        T prev = run;
        run += f[m];
        f[m] = p[m] * prev;
      }
    }
  }
  T total = 0;
  for (long m = 1; m <= N; ++m) total += f[m];
  return total;
}

struct Estimate {
  Real value = 0;
  long N = 0;
  Real bound = 0;
};

// Heuristic truncation bound C (1 + log N)^d / N with C = depth * 2^{depth-1} and
// d the number of entries below 2 (the only source of logarithmic growth).
Real tail_bound(const Tableau<Real>& t, long N);
const std::vector<long>& escalation_schedule();
// First N of the schedule whose bound meets tol; throws if none does.
Estimate smzv_estimate(const Tableau<Real>& t, Real tol);
Estimate smzv_estimate(const Tableau<int>& t, Real tol);

// Limit of a truncated sum S(N) from samples N <= n_max, fitting
// S(N) = L + sum_{j=1..3} sum_{k<=logpow} c_{jk} (log N)^k / N^j by least squares.
struct Extrapolation {
  Real value = 0;
  Real error = 0;  // disagreement between fits of neighbouring log order
  Real raw = 0;    // S(n_max)
  long n_max = 0;
};
Extrapolation extrapolate_limit(const std::function<Real(long)>& S, long n_max, int logpow);

}  // namespace smz
