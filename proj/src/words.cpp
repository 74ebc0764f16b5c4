#include "smz/words.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "smz/io.hpp"
#include "smz/zeta.hpp"

namespace smz {

std::string IntegralWord::str() const {
  std::string s;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (k) s += rel[k - 1] == Rel::LT ? '<' : '>';
    s += static_cast<char>('0' + forms[k]);
  }
  return s;
}

namespace {

// Skew tableau on a finite cell set that forms a skew shape.
Tableau<int> tableau_from_cells(const std::map<Cell, int>& cells) {
  int r0 = cells.begin()->first.row, c0 = cells.begin()->first.col;
  for (const auto& [c, v] : cells) {
    r0 = std::min(r0, c.row);
    c0 = std::min(c0, c.col);
  }
  std::map<int, std::pair<int, int>> span;
  for (const auto& [c, v] : cells) {
    int r = c.row - r0 + 1, col = c.col - c0 + 1;
    auto [it, fresh] = span.try_emplace(r, col, col);
    if (!fresh) {
      it->second.first = std::min(it->second.first, col);
      it->second.second = std::max(it->second.second, col);
    }
  }
  std::vector<int> outer, inner;
  for (int r = 1; r <= static_cast<int>(span.size()); ++r) {
    auto it = span.find(r);
    if (it == span.end()) throw std::logic_error("cell set has an empty row");
    outer.push_back(it->second.second);
    inner.push_back(it->second.first - 1);
  }
  SkewShape s{Partition(outer), Partition(inner)};
  if (s.size() != static_cast<int>(cells.size())) throw std::logic_error("cell set is not a skew shape");
  std::vector<int> vals;
  for (Cell c : s.cells()) vals.push_back(cells.at({c.row + r0 - 1, c.col + c0 - 1}));
  return Tableau<int>(s, vals);
}

}  // namespace

IntegralWord word_of_ribbon(const RibbonSpec& spec, const Tableau<int>& t) {
  if (!(ribbon_shape(spec) == t.shape())) throw std::invalid_argument("word_of_ribbon: tableau shape does not match " + spec.str());
  return word_of_ribbon(t);
}

IntegralWord word_of_ribbon(const Tableau<int>& t) {
  auto ch = ribbon_chain(t.shape());
  if (!ch) throw std::invalid_argument("word_of_ribbon: shape is not a ribbon");
  if (!in_index_set_I(t)) throw std::invalid_argument("word_of_ribbon: corner entries must be at least 2");
  IntegralWord w;
  for (std::size_t k = 0; k < ch->cells.size(); ++k) {
    if (k) w.rel.push_back(ch->left_step[k - 1] ? Rel::GT : Rel::LT);
    int g = t.at(ch->cells[k]);
    w.forms.push_back(1);
    for (int i = 1; i < g; ++i) {
      w.rel.push_back(Rel::LT);
      w.forms.push_back(0);
    }
  }
  return w;
}

IntegralWord dual_word(const IntegralWord& w) {
  IntegralWord d;
  for (auto it = w.forms.rbegin(); it != w.forms.rend(); ++it) d.forms.push_back(1 - *it);
  d.rel.assign(w.rel.rbegin(), w.rel.rend());
  return d;
}

std::optional<RibbonTableau> ribbon_of_word(const IntegralWord& w) {
  if (w.forms.empty() || w.forms[0] != 1) return std::nullopt;
  if (w.rel.size() + 1 != w.forms.size()) throw std::invalid_argument("ribbon_of_word: malformed word");
  std::map<Cell, int> cells;
  Cell cur{0, 0};
  cells[cur] = 1;
  for (std::size_t k = 1; k < w.forms.size(); ++k) {
    if (w.forms[k] == 0) {
      if (w.rel[k - 1] != Rel::LT) return std::nullopt;
      ++cells[cur];
    } else {
      if (w.rel[k - 1] == Rel::GT)
        --cur.col;
      else
        ++cur.row;
      cells[cur] = 1;
    }
  }
  Tableau<int> t = tableau_from_cells(cells);
  return RibbonTableau{ribbon_spec(t.shape()), t};
}

std::optional<RibbonTableau> dual_ribbon(const RibbonSpec& spec, const Tableau<int>& t) {
  return ribbon_of_word(dual_word(word_of_ribbon(spec, t)));
}

bool dual_is_ribbon(const Tableau<int>& t) {
  auto ch = ribbon_chain(t.shape());
  if (!ch) throw std::invalid_argument("dual_is_ribbon: shape is not a ribbon");
  const std::size_t n = ch->cells.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (t.at(ch->cells[k]) == 1 && ch->left_step[k]) return false;
  return t.at(ch->cells[n - 1]) != 1;
}

Tableau<int> staircase_dual(const std::vector<int>& row) {
  const int p = static_cast<int>(row.size());
  if (p == 0) throw std::invalid_argument("staircase_dual: empty row");
  for (int a : row)
    if (a < 2) throw std::invalid_argument("staircase_dual: entries must be at least 2");
  std::map<Cell, int> cells;
  int top = 1;
  for (int j = p; j >= 1; --j) {
    int len = row[p - j] - 1;  // a_{p+1-j} - 1
    for (int i = 0; i < len; ++i) cells[{top + i, j}] = i == len - 1 ? 2 : 1;
    top += len - 1;
  }
  return tableau_from_cells(cells);
}

Tableau<int> chen_tableau(int p, int q) {
  if (p < 1 || q < 0) throw std::invalid_argument("chen_tableau: needs p >= 1 and q >= 0");
  SkewShape s{Partition(std::vector<int>(p, q + 1)), Partition(std::vector<int>(p - 1, q))};
  std::vector<int> vals(s.size(), 1);
  vals.back() = 2;
  return Tableau<int>(s, vals);
}

std::string combination_str(const ZetaCombination& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    long k = c[i].first;
    if (i) s += k < 0 ? " - " : " + ";
    else if (k < 0) s += "-";
    if (std::abs(k) != 1) s += std::to_string(std::abs(k)) + " ";
    s += tableau_str(c[i].second);
  }
  return s.empty() ? "0" : s;
}

nlohmann::json DualityReport::to_json() const {
  return {{"lhs", lhs},
          {"rhs", rhs},
          {"value_lhs", to_string(value_lhs)},
          {"value_rhs", to_string(value_rhs)},
          {"error_lhs", static_cast<double>(error_lhs)},
          {"error_rhs", static_cast<double>(error_rhs)},
          {"abs_diff", static_cast<double>(diff)},
          {"N", N},
          {"method", method},
          {"tol", static_cast<double>(tol)},
          {"verdict", pass ? "pass" : "fail"}};
}

namespace {

Real truncated(const Tableau<int>& t, long N) {
  return t.shape().is_ribbon() ? smzv_trunc_ribbon<Real>(t, N) : smzv_trunc<Real>(t, N);
}

Real side_value(const ZetaCombination& c, long N) {
  Real s = 0;
  for (const auto& [k, t] : c) s += static_cast<Real>(k) * truncated(t, N);
  return s;
}

Real side_bound(const ZetaCombination& c, long N) {
  Real b = 0;
  for (const auto& [k, t] : c)
    b += std::abs(static_cast<Real>(k)) * tail_bound(map_values(t, [](int v) { return static_cast<Real>(v); }), N);
  return b;
}

int side_logpow(const ZetaCombination& c) {
  int p = 0;
  for (const auto& [k, t] : c) p = std::max<int>(p, std::count(t.values().begin(), t.values().end(), 1));
  return p;
}

}  // namespace

DualityReport check_duality_numeric(const ZetaCombination& a, const ZetaCombination& b, Real tol, long n_cap) {
  for (const auto* side : {&a, &b})
    for (const auto& [k, t] : *side)
      if (!in_index_set_I(t)) throw std::invalid_argument("check_duality_numeric: " + tableau_str(t) + " has a corner entry below 2");
  DualityReport r;
  r.lhs = combination_str(a);
  r.rhs = combination_str(b);
  r.tol = tol;
  for (long N : escalation_schedule()) {
    if (N > n_cap) break;
    Real ba = side_bound(a, N), bb = side_bound(b, N);
    if (ba + bb <= tol / 2) {
      r.method = "tail-bound";
      r.N = N;
      r.value_lhs = side_value(a, N);
      r.value_rhs = side_value(b, N);
      r.error_lhs = ba;
      r.error_rhs = bb;
      break;
    }
  }
  if (r.method.empty()) {
    if (n_cap < 1000) throw std::runtime_error("check_duality_numeric: resource cap below the smallest sample size");
    auto ea = extrapolate_limit([&](long N) { return side_value(a, N); }, n_cap, side_logpow(a));
    auto eb = extrapolate_limit([&](long N) { return side_value(b, N); }, n_cap, side_logpow(b));
    r.method = "extrapolated";
    r.N = n_cap;
    r.value_lhs = ea.value;
    r.value_rhs = eb.value;
    r.error_lhs = ea.error;
    r.error_rhs = eb.error;
  }
  r.diff = std::abs(r.value_lhs - r.value_rhs);
  r.pass = r.diff + r.error_lhs + r.error_rhs <= tol;
  return r;
}

}  // namespace smz
