#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "smz/scalar.hpp"
#include "smz/shapes.hpp"

namespace smz {

enum class Rel { LT, GT };

// Forms 0 = dt/t, 1 = dt/(1-t); rel[k] sits between form k and form k+1.
struct IntegralWord {
  std::vector<int> forms;
  std::vector<Rel> rel;

  int weight() const { return static_cast<int>(forms.size()); }
  std::string str() const;  // "1<0>1<1"
  bool operator==(const IntegralWord&) const = default;
};

struct RibbonTableau {
  RibbonSpec spec;
  Tableau<int> tableau;
};

// Cells in chain order from the top-right end; each entry g gives 1 0^{g-1}
// joined by <, and consecutive cells are joined by > for a step left, < for a
// step down. Throws unless the shape matches spec and the corners are >= 2.
IntegralWord word_of_ribbon(const RibbonSpec& spec, const Tableau<int>& t);
IntegralWord word_of_ribbon(const Tableau<int>& t);

// t -> 1 - t with the variables renumbered: forms reversed with 0 <-> 1,
// relations reversed (a relation between neighbours keeps its direction).
IntegralWord dual_word(const IntegralWord& w);

// Inverse of word_of_ribbon. A parse needs a leading 1 and < before every 0.
std::optional<RibbonTableau> ribbon_of_word(const IntegralWord& w);
std::optional<RibbonTableau> dual_ribbon(const RibbonSpec& spec, const Tableau<int>& t);

// Whether a ribbon tableau has a ribbon dual: no entry 1 followed (in chain
// order) by a step left, and the last cell of the chain is not 1.
bool dual_is_ribbon(const Tableau<int>& t);

// Dual of the single row (a_1, ..., a_p) with all a_i >= 2: p columns, column j
// (from the left) holding a_{p+1-j} - 1 cells, 1s with a 2 at the bottom.
Tableau<int> staircase_dual(const std::vector<int>& row);
// Anti-hook ((q+1)^p)/(q^{p-1}) filled with 1s and a 2 in the corner.
Tableau<int> chen_tableau(int p, int q);

// Integer combination of Schur MZVs.
using ZetaCombination = std::vector<std::pair<long, Tableau<int>>>;
std::string combination_str(const ZetaCombination& c);

struct DualityReport {
  std::string lhs, rhs;
  Real value_lhs = 0, value_rhs = 0;
  Real error_lhs = 0, error_rhs = 0;  // tail bound or extrapolation spread
  Real diff = 0;
  long N = 0;
  std::string method;  // "tail-bound" or "extrapolated"
  Real tol = 0;
  bool pass = false;
  nlohmann::json to_json() const;
};

// Truncated sums at the escalation schedule up to n_cap. If the crude tail
// bounds meet tol the raw values are compared; otherwise the limit of each side
// is extrapolated from samples below n_cap. Pass when
// |lhs - rhs| + error_lhs + error_rhs <= tol.
DualityReport check_duality_numeric(const ZetaCombination& a, const ZetaCombination& b, Real tol, long n_cap = 1'000'000);

}  // namespace smz
