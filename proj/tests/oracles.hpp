#pragma once

// Reference computations for the tests, independent of the library's
// enumerators and evaluators.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "smz/enumerate.hpp"
#include "smz/io.hpp"
#include "smz/qsym.hpp"
#include "smz/scalar.hpp"
#include "smz/shapes.hpp"

// Readable gtest output.
namespace smz {
inline void PrintTo(const Partition& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const SkewShape& s, std::ostream* os) { *os << s.str(); }
inline void PrintTo(const RibbonSpec& r, std::ostream* os) { *os << r.str(); }
inline void PrintTo(const Tableau<int>& t, std::ostream* os) { *os << tableau_str(t); }
inline void PrintTo(const QSym& x, std::ostream* os) { *os << x.str(); }
}  // namespace smz

namespace oracle {

using smz::Cell;
using smz::Rational;

// Every filling in 1..N, kept when rows weakly increase and columns strictly increase.
template <class F>
void brute_ssyt(const smz::SkewShape& s, int N, F f) {
  const auto& cells = s.cells();
  const int n = static_cast<int>(cells.size());
  std::map<Cell, int> pos;
  for (int k = 0; k < n; ++k) pos[cells[k]] = k;
  std::vector<int> m(n, 1);
  if (n == 0) {
    f(m);
    return;
  }
  if (N < 1) return;
  for (;;) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      Cell c = cells[k];
      if (auto it = pos.find({c.row, c.col + 1}); it != pos.end() && m[k] > m[it->second]) ok = false;
      if (auto it = pos.find({c.row + 1, c.col}); it != pos.end() && m[k] >= m[it->second]) ok = false;
    }
    if (ok) f(m);
    int k = n - 1;
    while (k >= 0 && m[k] == N) m[k--] = 1;
    if (k < 0) return;
    ++m[k];
  }
}

inline Rational inv_pow(long m, int s) {
  Rational r = 1;
  for (int i = 0; i < std::abs(s); ++i) r *= m;
  return s >= 0 ? 1 / r : r;
}

template <class V>
Rational ssyt_sum(const smz::Tableau<V>& t, int N) {
  Rational total = 0;
  brute_ssyt(t.shape(), N, [&](const std::vector<int>& m) {
    Rational w = 1;
    for (int k = 0; k < t.size(); ++k) w *= inv_pow(m[k], t[k]);
    total += w;
  });
  return total;
}

inline long ssyt_count(const smz::SkewShape& s, int N) {
  long c = 0;
  brute_ssyt(s, N, [&](const std::vector<int>&) { ++c; });
  return c;
}

// Hook-content formula prod (N + c) / h over the cells of a straight shape.
inline Rational hook_content(const smz::Partition& lam, int N) {
  Rational r = 1;
  smz::Partition conj = smz::conjugate(lam);
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam.part(i); ++j) {
      int hook = lam.part(i) - j + conj.part(j) - i + 1;
      Rational f(N + j - i, hook);
      f.canonicalize();
      r *= f;
    }
  return r;
}

// Nested loops m_1 < m_2 < ... (or <=) up to N.
inline Rational nested(const std::vector<int>& s, long N, bool star) {
  std::function<Rational(std::size_t, long)> rec = [&](std::size_t k, long lo) -> Rational {
    if (k == s.size()) return 1;
    Rational total = 0;
    for (long m = lo; m <= N; ++m) total += inv_pow(m, s[k]) * rec(k + 1, star ? m : m + 1);
    return total;
  };
  return rec(0, 1);
}

inline double nested_float(const std::vector<double>& s, long N, bool star) {
  std::function<double(std::size_t, long)> rec = [&](std::size_t k, long lo) -> double {
    if (k == s.size()) return 1;
    double total = 0;
    for (long m = lo; m <= N; ++m) total += std::pow(static_cast<double>(m), -s[k]) * rec(k + 1, star ? m : m + 1);
    return total;
  };
  return rec(0, 1);
}

// Blocked sequences written with cell labels such as "11" for (1,1);
// "11+12" is a block holding both.
struct LabelledTerm {
  int sign;
  std::vector<std::string> blocks;
  auto operator<=>(const LabelledTerm&) const = default;
};

inline std::vector<LabelledTerm> preceq_31_direct() {
  return {{1, {"11", "12", "13", "21"}}, {1, {"11+12", "13", "21"}}, {1, {"11", "12+13", "21"}},
          {1, {"11", "12", "13+21"}},    {1, {"11+12+13", "21"}},    {1, {"11+12", "13+21"}},
          {1, {"11", "12+13+21"}},       {1, {"11", "12", "21", "13"}}, {1, {"11+12", "21", "13"}},
          {1, {"11", "12+21", "13"}},    {1, {"11", "21", "12", "13"}}, {1, {"11", "21", "12+13"}}};
}

inline std::vector<LabelledTerm> preceq_31_star() {
  return {{1, {"11", "21", "12", "13"}},  {-1, {"11+21", "12", "13"}}, {-1, {"11", "12+21", "13"}},
          {1, {"11", "12", "21", "13"}},  {-1, {"11", "12", "13+21"}}, {1, {"11", "12", "13", "21"}}};
}

inline std::vector<LabelledTerm> preceq_211_direct() {
  return {{1, {"11", "12", "21", "31"}}, {1, {"11+12", "21", "31"}}, {1, {"11", "12+21", "31"}},
          {1, {"11", "21", "12", "31"}}, {1, {"11", "21", "12+31"}}, {1, {"11", "21", "31", "12"}}};
}

inline std::vector<LabelledTerm> preceq_211_star() {
  return {{1, {"11", "21", "31", "12"}},  {-1, {"11+21", "31", "12"}},  {-1, {"11", "21+31", "12"}},
          {-1, {"11", "21", "12+31"}},    {1, {"11+21+31", "12"}},      {1, {"11+21", "12+31"}},
          {1, {"11", "12+21+31"}},        {1, {"11", "21", "12", "31"}}, {-1, {"11+21", "12", "31"}},
          {-1, {"11", "12+21", "31"}},    {1, {"11", "12", "21", "31"}}, {-1, {"11", "12", "21+31"}}};
}

// Canonical form: labels inside a block sorted.
inline std::set<LabelledTerm> canonical(std::vector<LabelledTerm> v) {
  std::set<LabelledTerm> out;
  for (auto& t : v) {
    for (auto& b : t.blocks) {
      std::vector<std::string> parts;
      std::size_t start = 0;
      for (std::size_t p; (p = b.find('+', start)) != std::string::npos; start = p + 1) parts.push_back(b.substr(start, p - start));
      parts.push_back(b.substr(start));
      std::sort(parts.begin(), parts.end());
      b.clear();
      for (std::size_t i = 0; i < parts.size(); ++i) b += (i ? "+" : "") + parts[i];
    }
    out.insert(t);
  }
  return out;
}

// preceq_set written with the same cell labels.
inline std::set<LabelledTerm> labelled(const smz::SkewShape& s, smz::Variant v) {
  std::vector<LabelledTerm> out;
  for (const auto& b : smz::preceq_set(s, v)) {
    LabelledTerm t{b.sign, {}};
    for (const auto& blk : b.blocks) {
      std::string label;
      for (int k : blk) {
        Cell c = s.cells()[k];
        label += (label.empty() ? "" : "+") + std::to_string(c.row) + std::to_string(c.col);
      }
      t.blocks.push_back(label);
    }
    out.push_back(t);
  }
  return canonical(out);
}

// Every ribbon with n cells, normalized.
inline std::vector<smz::SkewShape> ribbons(int n) {
  std::set<smz::SkewShape> out;
  for (const auto& outer : smz::partitions_in_box(n, n))
    for (const auto& inner : smz::subpartitions(outer)) {
      if (outer.weight() - inner.weight() != n) continue;
      smz::SkewShape s{outer, inner};
      if (s.is_ribbon()) out.insert(s.normalized());
    }
  return {out.begin(), out.end()};
}

// Every filling of s with entries in 1..maxv.
inline std::vector<smz::Tableau<int>> fillings(const smz::SkewShape& s, int maxv) {
  std::vector<smz::Tableau<int>> out;
  std::vector<int> v(s.size(), 1);
  for (;;) {
    out.emplace_back(s, v);
    int k = s.size() - 1;
    while (k >= 0 && v[k] == maxv) v[k--] = 1;
    if (k < 0) return out;
    ++v[k];
  }
}

}  // namespace oracle
