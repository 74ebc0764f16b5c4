#include "smz/shapes.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace smz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int x : parts_) w += x;
  return w;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? " " : "") << parts_[i];
  return os.str();
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.part(1); ++i) {
    int n = 0;
    while (n < p.length() && p.parts()[n] >= i) ++n;
    out.push_back(n);
  }
  return Partition(std::move(out));
}

namespace {

void partitions_rec(int n, int maxpart, int maxlen, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (maxlen == 0) return;
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, maxlen - 1, cur, out);
    cur.pop_back();
  }
}

void box_rec(int rows, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == rows) return;
  for (int k = 1; k <= maxpart; ++k) {
    cur.push_back(k);
    box_rec(rows, k, cur, out);
    cur.pop_back();
  }
}

// Builds the skew shape whose cell set is exactly `cells`; throws otherwise.
SkewShape shape_from_cells(const std::set<Cell>& cells) {
  if (cells.empty()) return SkewShape();
  int maxrow = 0;
  for (Cell c : cells) maxrow = std::max(maxrow, c.row);
  std::vector<int> lo(maxrow + 1, 0), hi(maxrow + 1, -1);
  for (Cell c : cells) {
    if (hi[c.row] < 0) {
      lo[c.row] = hi[c.row] = c.col;
    } else {
      lo[c.row] = std::min(lo[c.row], c.col);
      hi[c.row] = std::max(hi[c.row], c.col);
    }
  }
  std::vector<int> outer(maxrow), inner(maxrow);
  for (int i = maxrow; i >= 1; --i) {
    if (hi[i] >= 0) {
      outer[i - 1] = hi[i];
      inner[i - 1] = lo[i] - 1;
    } else {
      // Empty row: pin it to the row below so both partitions stay monotone.
      outer[i - 1] = inner[i - 1] = outer[i];
    }
  }
  SkewShape s{Partition(outer), Partition(inner)};
  std::set<Cell> got(s.cells().begin(), s.cells().end());
  if (got != cells) throw std::invalid_argument("cell set is not a skew shape");
  return s;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  box_rec(rows, cols, cur, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& p) {
  std::vector<Partition> out;
  for (auto& q : partitions_in_box(p.length(), p.part(1)))
    if (p.contains(q)) out.push_back(q);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw std::invalid_argument("skew shape: inner partition not contained in outer");
  for (int i = 1; i <= outer_.length(); ++i) {
    row_offset_.push_back(static_cast<int>(cells_.size()));
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) cells_.push_back({i, j});
  }
}

bool SkewShape::contains(Cell c) const {
  return c.row >= 1 && c.row <= rows() && c.col > inner_.part(c.row) && c.col <= outer_.part(c.row);
}

int SkewShape::index_of(Cell c) const {
  if (!contains(c)) return -1;
  return row_offset_[c.row - 1] + (c.col - inner_.part(c.row) - 1);
}

std::vector<Cell> SkewShape::corners() const {
  std::vector<Cell> out;
  for (Cell c : cells_)
    if (!contains({c.row + 1, c.col}) && !contains({c.row, c.col + 1})) out.push_back(c);
  return out;
}

SkewShape SkewShape::conjugate() const { return SkewShape(smz::conjugate(outer_), smz::conjugate(inner_)); }

SkewShape SkewShape::normalized() const {
  if (cells_.empty()) return SkewShape();
  int top = cells_.front().row;
  int left = cells_.front().col;
  for (Cell c : cells_) left = std::min(left, c.col);
  std::set<Cell> moved;
  for (Cell c : cells_) moved.insert({c.row - top + 1, c.col - left + 1});
  return shape_from_cells(moved);
}

bool SkewShape::connected() const {
  if (cells_.empty()) return true;
  std::vector<bool> seen(cells_.size(), false);
  std::deque<Cell> q{cells_.front()};
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    Cell c = q.front();
    q.pop_front();
    for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}}) {
      int k = index_of(n);
      if (k >= 0 && !seen[k]) {
        seen[k] = true;
        ++count;
        q.push_back(n);
      }
    }
  }
  return count == size();
}

bool SkewShape::has_2x2() const {
  for (Cell c : cells_)
    if (contains({c.row + 1, c.col}) && contains({c.row, c.col + 1}) && contains({c.row + 1, c.col + 1})) return true;
  return false;
}

std::pair<int, int> SkewShape::content_range() const {
  int lo = 0, hi = -1;
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    int d = cells_[k].content();
    if (k == 0) lo = hi = d;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

std::string SkewShape::str() const {
  if (inner_.empty()) return outer_.str();
  return outer_.str() + " / " + inner_.str();
}

Partition parse_partition(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> parts;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("partition: bad token '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("partition: bad token '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

SkewShape parse_shape(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

std::map<Cell, Cell> anti_transpose_map(const SkewShape& s, int box_rows, int box_cols) {
  std::map<Cell, Cell> m;
  for (Cell c : s.cells()) {
    if (c.row > box_rows || c.col > box_cols) throw std::invalid_argument("anti_transpose: shape exceeds box");
    m[c] = Cell{box_cols + 1 - c.col, box_rows + 1 - c.row};
  }
  return m;
}

SkewShape anti_transpose(const SkewShape& s, int box_rows, int box_cols) {
  std::set<Cell> img;
  for (const auto& [from, to] : anti_transpose_map(s, box_rows, box_cols)) img.insert(to);
  return shape_from_cells(img);
}

SkewShape anti_transpose(const SkewShape& s) {
  SkewShape n = s.normalized();
  return anti_transpose(n, n.rows(), n.outer().part(1));
}

Frobenius frobenius(const Partition& p) {
  Frobenius f;
  Partition c = conjugate(p);
  for (int i = 1; p.part(i) >= i; ++i) {
    f.arms.push_back(p.part(i) - i + 1);
    f.legs.push_back(c.part(i) - i);
  }
  return f;
}

Partition from_frobenius(const Frobenius& f) {
  if (f.arms.size() != f.legs.size()) throw std::invalid_argument("frobenius: arm/leg count mismatch");
  std::set<Cell> cells;
  for (std::size_t k = 0; k < f.arms.size(); ++k) {
    int d = static_cast<int>(k) + 1;
    for (int j = 0; j < f.arms[k]; ++j) cells.insert({d, d + j});
    for (int i = 1; i <= f.legs[k]; ++i) cells.insert({d + i, d});
  }
  SkewShape s = shape_from_cells(cells);
  if (!s.straight()) throw std::invalid_argument("frobenius: not a partition");
  return s.outer();
}

std::string RibbonSpec::str() const {
  std::ostringstream os;
  os << "rib(";
  for (std::size_t i = 0; i < hooks.size(); ++i) os << (i ? "|" : "") << hooks[i].first << "," << hooks[i].second;
  os << ")";
  return os.str();
}

SkewShape ribbon_shape(const RibbonSpec& spec) {
  std::vector<Cell> cells;
  Cell pos{0, 0};
  auto step = [&](bool left) {
    if (cells.empty()) {
      cells.push_back(pos);
      return;
    }
    pos = left ? Cell{pos.row, pos.col - 1} : Cell{pos.row + 1, pos.col};
    cells.push_back(pos);
  };
  for (auto [p, q] : spec.hooks) {
    if (p < 0 || q < 0 || p + q == 0) throw std::invalid_argument("ribbon: hooks must be nonempty");
    for (int k = 0; k < p; ++k) step(k > 0);
    for (int k = 0; k < q; ++k) step(false);
  }
  if (cells.empty()) throw std::invalid_argument("ribbon: empty spec");
  int left = 0;
  for (Cell c : cells) left = std::min(left, c.col);
  std::set<Cell> moved;
  for (Cell c : cells) moved.insert({c.row + 1, c.col - left + 1});
  SkewShape s = shape_from_cells(moved);
  if (!(ribbon_spec(s) == spec)) throw std::invalid_argument("ribbon: non-canonical spec " + spec.str());
  return s;
}

std::optional<RibbonChain> ribbon_chain(const SkewShape& s) {
  if (!s.is_ribbon()) return std::nullopt;
  RibbonChain ch;
  Cell cur = s.cells().front();
  for (Cell c : s.cells())
    if (c.content() > cur.content()) cur = c;
  ch.cells.push_back(cur);
  while (static_cast<int>(ch.cells.size()) < s.size()) {
    Cell l{cur.row, cur.col - 1}, d{cur.row + 1, cur.col};
    if (s.contains(l)) {
      cur = l;
      ch.left_step.push_back(true);
    } else if (s.contains(d)) {
      cur = d;
      ch.left_step.push_back(false);
    } else {
      return std::nullopt;
    }
    ch.cells.push_back(cur);
  }
  return ch;
}

RibbonSpec ribbon_spec(const SkewShape& s) {
  auto ch = ribbon_chain(s);
  if (!ch) throw std::invalid_argument("ribbon_spec: not a ribbon: " + s.str());
  const auto& st = ch->left_step;
  const int n = static_cast<int>(ch->cells.size());
  RibbonSpec spec;
  if (n == 1) {
    spec.hooks.push_back({1, 0});
    return spec;
  }
  int start = 0;
  if (!st[0]) {
    int b = 0;
    while (b < n - 1 && !st[b]) ++b;
    if (b == n - 1) {
      spec.hooks.push_back({0, n});
      return spec;
    }
    spec.hooks.push_back({0, b});
    start = b;
  }
  while (start < n) {
    int a = 0;
    while (start + a < n - 1 && st[start + a]) ++a;
    int v = 0;
    while (start + a + v < n - 1 && !st[start + a + v]) ++v;
    bool at_end = start + a + v == n - 1;
    if (at_end) {
      spec.hooks.push_back({a + 1, v});
      break;
    }
    spec.hooks.push_back({a + 1, v - 1});
    start += a + v;
  }
  return spec;
}

bool is_canonical(const RibbonSpec& spec) {
  try {
    ribbon_shape(spec);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool in_index_set_I(const Tableau<int>& t) {
  for (int v : t.values())
    if (v < 1) throw std::invalid_argument("in_index_set_I: entries must be positive integers");
  for (Cell c : t.shape().corners())
    if (t.at(c) < 2) return false;
  return true;
}

}  // namespace smz
