#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smz {

// 1-based (row, column); row 1 is the top row.
struct Cell {
  int row = 0;
  int col = 0;
  int content() const { return col - row; }
  auto operator<=>(const Cell&) const = default;
};

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Trailing zeros are dropped; anything else that is not weakly decreasing throws.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  // 1-based; zero past the end.
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
  bool contains(const Partition& mu) const;
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
std::vector<Partition> partitions_of(int n);
// All partitions contained in the box with `rows` rows and `cols` columns.
std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> subpartitions(const Partition& p);

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool straight() const { return inner_.empty(); }
  int rows() const { return outer_.length(); }
  int size() const { return static_cast<int>(cells_.size()); }
  // Row-major order; tableau values are stored in this order.
  const std::vector<Cell>& cells() const { return cells_; }
  bool contains(Cell c) const;
  // Position of c in cells(), or -1.
  int index_of(Cell c) const;
  int row_begin(int i) const { return inner_.part(i) + 1; }
  int row_end(int i) const { return outer_.part(i); }

  std::vector<Cell> corners() const;
  SkewShape conjugate() const;
  // Drops empty rows at top and bottom and empty columns at the left.
  SkewShape normalized() const;
  bool connected() const;
  bool has_2x2() const;
  bool is_ribbon() const { return size() > 0 && connected() && !has_2x2(); }
  std::pair<int, int> content_range() const;
  std::string str() const;

  bool operator==(const SkewShape& o) const { return outer_ == o.outer_ && inner_ == o.inner_; }
  auto operator<=>(const SkewShape& o) const {
    if (auto c = outer_ <=> o.outer_; c != 0) return c;
    return inner_ <=> o.inner_;
  }

 private:
  Partition outer_, inner_;
  std::vector<Cell> cells_;
  std::vector<int> row_offset_;
};

// Parses "4 3 3 2" or "4 3 3 2 / 2 1".
SkewShape parse_shape(const std::string& text);
Partition parse_partition(const std::string& text);

template <class V>
class Tableau {
 public:
  Tableau() = default;
  Tableau(SkewShape shape, std::vector<V> values) : shape_(std::move(shape)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != shape_.size())
      throw std::invalid_argument("tableau: value count does not match cell count");
  }
  // Rows are listed top to bottom, each giving the values of that row's cells left to right.
  static Tableau from_rows(const SkewShape& shape, const std::vector<std::vector<V>>& rows) {
    std::vector<V> vals;
    if (static_cast<int>(rows.size()) != shape.rows()) throw std::invalid_argument("tableau: row count mismatch");
    for (int i = 1; i <= shape.rows(); ++i) {
      const auto& r = rows[i - 1];
      if (static_cast<int>(r.size()) != shape.row_end(i) - shape.row_begin(i) + 1)
        throw std::invalid_argument("tableau: row length mismatch");
      vals.insert(vals.end(), r.begin(), r.end());
    }
    return Tableau(shape, std::move(vals));
  }

  const SkewShape& shape() const { return shape_; }
  const std::vector<V>& values() const { return values_; }
  const V& at(Cell c) const {
    int k = shape_.index_of(c);
    if (k < 0) throw std::out_of_range("tableau: cell outside shape");
    return values_[k];
  }
  const V& operator[](int k) const { return values_[k]; }
  int size() const { return shape_.size(); }

  bool operator==(const Tableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<V> values_;
};

template <class V, class F>
auto map_values(const Tableau<V>& t, F f) {
  using W = decltype(f(t[0]));
  std::vector<W> out;
  out.reserve(t.size());
  for (const auto& v : t.values()) out.push_back(f(v));
  return Tableau<W>(t.shape(), std::move(out));
}

template <class V>
Tableau<V> conjugate(const Tableau<V>& t) {
  SkewShape c = t.shape().conjugate();
  std::vector<V> vals;
  for (Cell x : c.cells()) vals.push_back(t.at({x.col, x.row}));
  return Tableau<V>(c, std::move(vals));
}

// Reflection in the anti-diagonal of the bounding box (rows x cols):
// (i, j) -> (cols + 1 - j, rows + 1 - i).
std::map<Cell, Cell> anti_transpose_map(const SkewShape& s, int box_rows, int box_cols);
SkewShape anti_transpose(const SkewShape& s);
SkewShape anti_transpose(const SkewShape& s, int box_rows, int box_cols);

template <class V>
Tableau<V> anti_transpose(const Tableau<V>& t, int box_rows, int box_cols) {
  auto m = anti_transpose_map(t.shape(), box_rows, box_cols);
  SkewShape s = anti_transpose(t.shape(), box_rows, box_cols);
  std::vector<V> vals(s.size());
  for (const auto& [from, to] : m) vals[s.index_of(to)] = t.at(from);
  return Tableau<V>(s, std::move(vals));
}

// Uses the bounding box of the cells and returns a normalized shape.
template <class V>
Tableau<V> anti_transpose(const Tableau<V>& t) {
  SkewShape n = t.shape().normalized();
  int dr = 0, dc = 0;
  if (n.size() > 0) {
    Cell a = t.shape().cells().front(), b = n.cells().front();
    dr = a.row - b.row;
    dc = a.col - b.col;
  }
  std::vector<V> vals;
  for (Cell c : n.cells()) vals.push_back(t.at({c.row + dr, c.col + dc}));
  Tableau<V> tn(n, std::move(vals));
  return anti_transpose(tn, n.rows(), n.outer().part(1));
}

// Rotation by pi inside the bounding box; equals the conjugate of the anti-transpose.
template <class V>
Tableau<V> rotate_pi(const Tableau<V>& t) {
  return conjugate(anti_transpose(t));
}

struct Frobenius {
  std::vector<int> arms;  // p_i = lambda_i - i + 1
  std::vector<int> legs;  // q_i = lambda'_i - i
};
Frobenius frobenius(const Partition& p);
Partition from_frobenius(const Frobenius& f);

// Hooks (p_i, 1^{q_i}) chained from the top right to the bottom left.
struct RibbonSpec {
  std::vector<std::pair<int, int>> hooks;
  bool operator==(const RibbonSpec&) const = default;
  std::string str() const;
};

// Cells of a ribbon in chain order: top-right end first. step[k] is true when
// cell k+1 lies left of cell k, false when it lies below.
struct RibbonChain {
  std::vector<Cell> cells;
  std::vector<bool> left_step;
};

SkewShape ribbon_shape(const RibbonSpec& spec);
std::optional<RibbonChain> ribbon_chain(const SkewShape& s);
// Canonical spec: greedy maximal hooks from the top right. Throws if s is not a ribbon.
RibbonSpec ribbon_spec(const SkewShape& s);
bool is_canonical(const RibbonSpec& spec);

template <class V>
bool in_region_W(const Tableau<V>& t) {
  auto corners = t.shape().corners();
  for (int k = 0; k < t.size(); ++k) {
    Cell c = t.shape().cells()[k];
    bool corner = false;
    for (Cell x : corners) corner = corner || x == c;
    if (corner ? !(t[k] > 1) : !(t[k] >= 1)) return false;
  }
  return true;
}

bool in_index_set_I(const Tableau<int>& t);

// Entry at (i, j) is a[j - i].
template <class V>
Tableau<V> diagonal_tableau(const SkewShape& s, const std::map<int, V>& a) {
  std::vector<V> vals;
  for (Cell c : s.cells()) {
    auto it = a.find(c.content());
    if (it == a.end()) throw std::invalid_argument("diagonal_tableau: missing diagonal " + std::to_string(c.content()));
    vals.push_back(it->second);
  }
  return Tableau<V>(s, std::move(vals));
}

template <class V>
std::optional<std::map<int, V>> diagonal_values(const Tableau<V>& t) {
  std::map<int, V> a;
  for (int k = 0; k < t.size(); ++k) {
    int d = t.shape().cells()[k].content();
    auto [it, fresh] = a.emplace(d, t[k]);
    if (!fresh && !(it->second == t[k])) return std::nullopt;
  }
  return a;
}

template <class V>
bool is_diagonal(const Tableau<V>& t) {
  return diagonal_values(t).has_value();
}

}  // namespace smz
