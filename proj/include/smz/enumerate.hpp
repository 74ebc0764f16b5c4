#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "smz/scalar.hpp"
#include "smz/shapes.hpp"

namespace smz {

// Neighbour indices used by the SSYT recursion (-1 when absent).
struct SsytLayout {
  std::vector<int> left, above, below_run;
  explicit SsytLayout(const SkewShape& s);
};

// Calls f(entries) for every SSYT of shape s with entries in 1..N, in row-major
// lexicographic order. entries follows s.cells(). f may return false to stop.
template <class F>
void for_each_ssyt(const SkewShape& s, int N, F&& f) {
  const int n = s.size();
  if (n == 0) {
    std::vector<int> none;
    f(none);
    return;
  }
  if (N < 1) return;
  SsytLayout lay(s);
  std::vector<int> m(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if constexpr (std::is_same_v<decltype(f(m)), bool>) {
        if (!f(m)) stop = true;
      } else {
        f(m);
      }
      return;
    }
    int lo = 1;
    if (lay.left[k] >= 0) lo = std::max(lo, m[lay.left[k]]);
    if (lay.above[k] >= 0) lo = std::max(lo, m[lay.above[k]] + 1);
    int hi = N - lay.below_run[k];
    for (int v = lo; v <= hi && !stop; ++v) {
      m[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

std::int64_t ssyt_count(const SkewShape& s, int N);

// Orderings of the cells (as indices into s.cells()) compatible with rows and columns.
std::vector<std::vector<int>> linear_extensions(const SkewShape& s);

enum class Variant { direct, conjugate };

struct BlockedSequence {
  std::vector<std::vector<int>> blocks;  // cell indices, sorted inside each block
  int sign = 1;                          // (-1)^{n - #blocks} for the conjugate variant
  auto operator<=>(const BlockedSequence&) const = default;
};

// Adjacent merges of linear extensions. direct: no block holds two cells of one
// column; conjugate: no block holds two cells of one row. Distinct block
// sequences are listed once.
std::vector<BlockedSequence> preceq_set(const SkewShape& s, Variant v);

enum class RimKind { H, E };

struct RimDecomposition {
  SkewShape shape;
  RimKind kind = RimKind::H;
  // Ribbon cells in reading order: H ascending content, E descending content.
  std::vector<std::vector<Cell>> ribbons;
  std::vector<int> sigma;  // sigma[i-1] = sigma(i)
  int sign = 1;
};

// H: ribbon i starts at the first cell of row i; E: at the first cell of column i.
std::vector<RimDecomposition> rim_decompositions(const SkewShape& s, RimKind kind);
// Labels each cell with the index of its ribbon.
Tableau<int> rim_tableau(const RimDecomposition& d);
int permutation_sign(const std::vector<int>& sigma);

template <class V>
std::vector<std::vector<V>> theta_contents(const RimDecomposition& d, const Tableau<V>& t) {
  if (!(d.shape == t.shape())) throw std::invalid_argument("theta_contents: shape mismatch");
  std::vector<std::vector<V>> out;
  for (const auto& rib : d.ribbons) {
    std::vector<V> vals;
    for (Cell c : rib) vals.push_back(t.at(c));
    out.push_back(std::move(vals));
  }
  return out;
}

enum class PatternSubset { all, intersecting, non_intersecting };

inline std::int64_t default_pattern_cap() { return 10'000'000; }

// Visits lattice patterns for a straight shape. fill[k] is the row index assigned
// to cell k by the pattern (each ribbon's k-th cell gets the row of the path's
// k-th horizontal or north-east step).
void for_each_pattern(const Partition& lambda, int N, RimKind kind, PatternSubset subset,
                      const std::function<void(int sign, const std::vector<int>& fill)>& visit,
                      std::int64_t cap = default_pattern_cap());

template <class T, class E>
T pattern_sum(const Partition& lambda, const Tableau<E>& t, int N, RimKind kind, PatternSubset subset,
              std::int64_t cap = default_pattern_cap()) {
  if (!(t.shape() == SkewShape(lambda))) throw std::invalid_argument("pattern_sum: tableau shape mismatch");
  T total = 0;
  for_each_pattern(
      lambda, N, kind, subset,
      [&](int sign, const std::vector<int>& fill) {
        T w = 1;
        for (int k = 0; k < t.size(); ++k) w *= inv_pow<T>(fill[k], t[k]);
        if (sign > 0)
          total += w;
        else
          total -= w;
      },
      cap);
  return total;
}

// Sums of terms prod_c m_c^{-x_{var(c)}} kept symbolically: each term is keyed by
// the product of m over cells for every variable (factors equal to 1 dropped).
// Two such sums agree for all real exponent values iff their maps agree.
using FormalKey = std::vector<std::pair<int, std::int64_t>>;
using FormalSum = std::map<FormalKey, std::int64_t>;

FormalKey formal_key(const std::vector<int>& var, const std::vector<int>& fill);
void formal_add(FormalSum& acc, const FormalKey& key, std::int64_t coeff);
FormalSum formal_ssyt_sum(const SkewShape& s, int N, const std::vector<int>& var);
FormalSum formal_pattern_sum(const Partition& lambda, int N, RimKind kind, PatternSubset subset,
                             const std::vector<int>& var);
// Variable per cell: distinct per cell (generic) or shared along diagonals.
std::vector<int> cell_variables(const SkewShape& s);
std::vector<int> diagonal_variables(const SkewShape& s);

}  // namespace smz
