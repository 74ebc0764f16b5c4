#pragma once

#include <string>
#include <vector>

#include "smz/scalar.hpp"
#include "smz/shapes.hpp"

namespace smz {

// coeff * pi^power
struct PiPower {
  Rational coeff = 0;
  int power = 0;

  std::string str() const;  // "11/302400 pi^8"

  friend PiPower operator*(const PiPower& a, const PiPower& b) { return {a.coeff * b.coeff, a.power + b.power}; }
  friend PiPower operator+(const PiPower& a, const PiPower& b);
  friend bool operator==(const PiPower& a, const PiPower& b) {
    return a.coeff == b.coeff && (a.coeff == 0 || a.power == b.power);
  }
  Real approx() const;
};

Rational bernoulli(int n);  // B_1 = -1/2
PiPower zeta_even_exact(int two_k);
Integer centralizer_order(const Partition& mu);
// Murnaghan-Nakayama, memoized per thread.
long character(const Partition& lambda, const Partition& mu);

inline constexpr int kMaxConstantK = 8;
inline constexpr int kMaxConstantWeight = 12;

// zeta_lambda({2k}^lambda) = sum_mu chi^lambda(mu) / z_mu prod_i zeta(2k mu_i)
PiPower smzv_constant_exact(const Partition& lambda, int two_k);
// Truncated series on the constant tableau, for cross-checks.
Scalar smzv_constant_series(const Partition& lambda, Real s, long N);

struct ConstantTableRow {
  Partition lambda;
  std::vector<PiPower> values;  // k = 1..kmax
};
// Rows for every lambda of weight n, in reverse lexicographic order.
std::vector<ConstantTableRow> constant_table(int n, int kmax);

}  // namespace smz
