#include "smz/qsym.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "smz/zeta.hpp"

namespace smz {

int weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

std::string str(const Composition& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition{}};
  // bit i set = cut after position i+1
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Composition c;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask >> i & 1) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> coarsenings(const Composition& c) {
  if (c.empty()) return {c};
  const int n = static_cast<int>(c.size());
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Composition d{c[0]};
    for (int i = 1; i < n; ++i) {
      if (mask >> (i - 1) & 1)
        d.back() += c[i];
      else
        d.push_back(c[i]);
    }
    out.push_back(d);
  }
  return out;
}

std::vector<Composition> refinements(const Composition& c) {
  std::vector<Composition> out{Composition{}};
  for (int p : c) {
    std::vector<Composition> next;
    for (const auto& head : out)
      for (const auto& tail : compositions_of(p)) {
        Composition d = head;
        d.insert(d.end(), tail.begin(), tail.end());
        next.push_back(d);
      }
    out = std::move(next);
  }
  return out;
}

bool GradedLex::operator()(const Composition& a, const Composition& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

QSym QSym::M(const Composition& c, Integer coeff) {
  for (int p : c)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  QSym x;
  x.add(c, coeff);
  return x;
}

void QSym::add(const Composition& c, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(c, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QSym& QSym::operator+=(const QSym& o) {
  for (const auto& [c, k] : o.terms_) add(c, k);
  return *this;
}

QSym& QSym::operator-=(const QSym& o) {
  for (const auto& [c, k] : o.terms_) add(c, -k);
  return *this;
}

QSym operator-(QSym a) {
  for (auto& [c, k] : a.terms_) k = -k;
  return a;
}

QSym operator*(const Integer& k, QSym a) {
  if (k == 0) return {};
  for (auto& [c, v] : a.terms_) v *= k;
  return a;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Composition, Composition>& p) const {
    std::size_t h = 0;
    for (int x : p.first) h = h * 131 + static_cast<std::size_t>(x);
    h = h * 1000003 + 7;
    for (int x : p.second) h = h * 131 + static_cast<std::size_t>(x);
    return h;
  }
};

using ShuffleTable = std::vector<std::pair<Composition, long>>;

// Interleave-or-merge on compositions; results starting from the front.
const ShuffleTable& shuffle_terms(const Composition& a, const Composition& b) {
  thread_local std::unordered_map<std::pair<Composition, Composition>, ShuffleTable, PairHash> memo;
  auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::map<Composition, long> acc;
  if (a.empty() || b.empty()) {
    acc[a.empty() ? b : a] = 1;
  } else {
    Composition at(a.begin() + 1, a.end()), bt(b.begin() + 1, b.end());
    auto prepend = [&](int head, const ShuffleTable& rest) {
      for (const auto& [c, k] : rest) {
        Composition d{head};
        d.insert(d.end(), c.begin(), c.end());
        acc[d] += k;
      }
    };
    prepend(a[0], shuffle_terms(at, b));
    prepend(b[0], shuffle_terms(a, bt));
    prepend(a[0] + b[0], shuffle_terms(at, bt));
  }
  return memo.emplace(std::move(key), ShuffleTable(acc.begin(), acc.end())).first->second;
}

}  // namespace

QSym operator*(const QSym& a, const QSym& b) {
  QSym out;
  for (const auto& [ca, ka] : a.terms_)
    for (const auto& [cb, kb] : b.terms_) {
      Integer k = ka * kb;
      for (const auto& [c, m] : shuffle_terms(ca, cb)) out.add(c, k * m);
    }
  return out;
}

QSym quasi_shuffle(const QSym& a, const QSym& b) { return a * b; }

std::string QSym::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [c, k] : terms_) {
    Integer a = abs(k);
    if (first)
      s += k < 0 ? "-" : "";
    else
      s += k < 0 ? " - " : " + ";
    if (a != 1) s += a.get_str() + " ";
    s += "M" + smz::str(c);
    first = false;
  }
  return s;
}

nlohmann::json QSym::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [c, k] : terms_) terms.push_back({c, k.get_str()});
  return {{"M", terms}};
}

QSym parse_qsym(const std::string& text) {
  QSym out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("qsym expression: " + what + " at offset " + std::to_string(i));
  };
  bool any = false;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any) {
      fail("expected + or -");
    }
    Integer coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coeff = Integer(text.substr(i, j - i));
      i = j;
      skip();
      if (i < text.size() && text[i] == '*') ++i;
      skip();
    }
    if (i >= text.size() || std::string("MEF").find(text[i]) == std::string::npos) fail("expected M, E or F");
    char basis = text[i++];
    skip();
    if (i >= text.size() || text[i] != '[') fail("expected [");
    ++i;
    Composition c;
    while (true) {
      skip();
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) fail("expected a positive part");
      c.push_back(std::stoi(text.substr(i, j - i)));
      if (c.back() < 1) fail("parts must be positive");
      i = j;
      skip();
      if (i < text.size() && text[i] == ',') ++i;
    }
    QSym b = basis == 'M' ? monomial(c) : basis == 'E' ? essential(c) : fundamental(c);
    out += Integer(sign * coeff) * b;
    any = true;
  }
  if (!any) fail("empty expression");
  return out;
}

QSym monomial(const Composition& c) { return QSym::M(c); }

QSym essential(const Composition& c) {
  QSym x;
  for (const auto& d : coarsenings(c)) x.add(d, 1);
  return x;
}

QSym fundamental(const Composition& c) {
  QSym x;
  for (const auto& d : refinements(c)) x.add(d, 1);
  return x;
}

namespace {

Composition block_sums(const BlockedSequence& b, const Tableau<int>& t) {
  Composition c;
  for (const auto& block : b.blocks) {
    int s = 0;
    for (int k : block) s += t[k];
    c.push_back(s);
  }
  return c;
}

void require_positive(const Tableau<int>& t) {
  for (int v : t.values())
    if (v < 1) throw std::invalid_argument("quasi-symmetric tableau entries must be positive");
}

}  // namespace

QSym schur_qsym(const Tableau<int>& t) {
  require_positive(t);
  QSym x;
  for (const auto& b : preceq_set(t.shape(), Variant::direct)) x.add(block_sums(b, t), 1);
  return x;
}

QSym schur_qsym_signed_E(const Tableau<int>& t) {
  require_positive(t);
  QSym x;
  for (const auto& b : preceq_set(t.shape(), Variant::conjugate)) x += Integer(b.sign) * essential(block_sums(b, t));
  return x;
}

namespace {

QSym rim_products(const Tableau<int>& t, RimKind kind) {
  require_positive(t);
  QSym total;
  for (const auto& d : rim_decompositions(t.shape(), kind)) {
    QSym term = QSym::unit();
    for (const auto& args : theta_contents(d, t)) term = term * (kind == RimKind::H ? essential(args) : monomial(args));
    total += Integer(d.sign) * term;
  }
  return total;
}

}  // namespace

QSym schur_rim_H(const Tableau<int>& t) { return rim_products(t, RimKind::H); }
QSym schur_rim_E(const Tableau<int>& t) { return rim_products(t, RimKind::E); }

QSym antipode(const QSym& x) {
  QSym out;
  for (const auto& [c, k] : x.terms()) {
    Composition r(c.rbegin(), c.rend());
    out += Integer(c.size() % 2 ? -k : k) * essential(r);
  }
  return out;
}

QSym antipode_by_splitting(const QSym& x) {
  QSym out;
  for (const auto& [c, k] : x.terms()) {
    const int n = static_cast<int>(c.size());
    if (n == 0) {
      out.add(c, k);
      continue;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      QSym prod = QSym::unit();
      Composition piece{c[0]};
      int m = 0;
      for (int i = 1; i <= n; ++i) {
        if (i == n || (mask >> (i - 1) & 1)) {
          prod = prod * monomial(piece);
          ++m;
          piece.clear();
        }
        if (i < n) piece.push_back(c[i]);
      }
      out += Integer(m % 2 ? -k : k) * prod;
    }
  }
  return out;
}

void TruncatedPoly::add(const std::vector<int>& exps, const Integer& c) {
  if (c == 0) return;
  if (static_cast<int>(exps.size()) != N_) throw std::invalid_argument("TruncatedPoly: wrong variable count");
  if (std::accumulate(exps.begin(), exps.end(), 0) > D_) return;
  auto [it, fresh] = terms_.try_emplace(exps, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.N_ != b.N_) throw std::invalid_argument("TruncatedPoly: variable count mismatch");
  TruncatedPoly out(a.N_, std::min(a.D_, b.D_));
  std::vector<int> e(a.N_);
  for (const auto& [ea, ka] : a.terms_)
    for (const auto& [eb, kb] : b.terms_) {
      for (int i = 0; i < a.N_; ++i) e[i] = ea[i] + eb[i];
      out.add(e, ka * kb);
    }
  return out;
}

TruncatedPoly realize(const QSym& x, int N, int D) {
  TruncatedPoly p(N, D);
  for (const auto& [c, k] : x.terms()) {
    if (weight(c) > D) continue;
    const int n = static_cast<int>(c.size());
    std::vector<int> pos(n), e(N);
    std::function<void(int, int)> rec = [&](int i, int from) {
      if (i == n) {
        std::fill(e.begin(), e.end(), 0);
        for (int j = 0; j < n; ++j) e[pos[j]] = c[j];
        p.add(e, k);
        return;
      }
      for (int m = from; m < N; ++m) {
        pos[i] = m;
        rec(i + 1, m + 1);
      }
    };
    rec(0, 0);
  }
  return p;
}

Rational rho_N(const QSym& x, long N) {
  Rational total = 0;
  for (const auto& [c, k] : x.terms()) total += Rational(k) * mzv_trunc<Rational>(c, N);
  return total;
}

QSym determinant(const Matrix<QSym>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return QSym::unit();
  if (n > 20) throw std::invalid_argument("determinant: matrix too large");
  std::unordered_map<unsigned, QSym> memo;
  // columns in mask fill rows n - popcount(mask) .. n - 1
  std::function<QSym(unsigned)> rec = [&](unsigned mask) -> QSym {
    if (mask == 0) return QSym::unit();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int row = n - __builtin_popcount(mask);
    QSym total;
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      if (!m[row][j].zero()) {
        QSym term = m[row][j] * rec(mask & ~(1u << j));
        if (pos % 2)
          total -= term;
        else
          total += term;
      }
      ++pos;
    }
    return memo.emplace(mask, total).first->second;
  };
  return rec((1u << n) - 1);
}

nlohmann::json QSymReport::to_json() const {
  nlohmann::json j{{"identity", identity}, {"shape", shape}};
  nlohmann::json s = nlohmann::json::object();
  for (const auto& [name, x] : sides) s[name] = x.to_json()["M"];
  j["sides"] = s;
  j["verdict"] = equal ? "equal" : "unequal";
  return j;
}

QSymReport make_qsym_report(std::string identity, std::string shape, std::vector<std::pair<std::string, QSym>> sides) {
  QSymReport r{std::move(identity), std::move(shape), std::move(sides), true};
  for (const auto& [name, x] : r.sides) r.equal = r.equal && x == r.sides.front().second;
  return r;
}

QSymReport antipode_schur_identity(const Tableau<int>& t) {
  const Integer sign = t.size() % 2 ? -1 : 1;
  auto sharp = anti_transpose(t);
  std::vector<std::pair<std::string, QSym>> sides{
      {"antipode", antipode(schur_qsym(t))},
      {"transposed", sign * schur_qsym(sharp)},
  };
  if (is_diagonal(t)) {
    sides.emplace_back("rim-H", sign * schur_rim_H(sharp));
    sides.emplace_back("rim-E", sign * schur_rim_E(sharp));
  }
  return make_qsym_report("antipode-schur", t.shape().str(), std::move(sides));
}

QSymReport antipode_formulas(const Composition& c) {
  QSym x = monomial(c);
  return make_qsym_report("antipode-formulas", str(c), {{"reversed-E", antipode(x)}, {"splitting", antipode_by_splitting(x)}});
}

Matrix<QSym> jt_quasi_matrix(const SkewShape& s, const DiagMap& c, RimKind kind) {
  const bool H = kind == RimKind::H;
  Partition lam = H ? s.outer() : conjugate(s.outer());
  Partition mu = H ? s.inner() : conjugate(s.inner());
  const int n = lam.length();
  Matrix<QSym> m(n, std::vector<QSym>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int L = lam.part(i) - mu.part(j) - i + j;
      if (L == 0)
        m[i - 1][j - 1] = QSym::unit();
      else if (L > 0)
        m[i - 1][j - 1] =
            H ? essential(diag_run(c, mu.part(j) - j + 1, 1, L)) : monomial(diag_run(c, -mu.part(j) + j - 1, -1, L));
    }
  return m;
}

QSymReport jt_quasi(const SkewShape& s, const DiagMap& c, RimKind kind) {
  auto t = diagonal_tableau(s, std::map<int, int>(c));
  return make_qsym_report(kind == RimKind::H ? "jacobi-trudi-quasi-E" : "jacobi-trudi-quasi-M", s.str(),
                          {{"schur", schur_qsym(t)}, {"determinant", determinant(jt_quasi_matrix(s, c, kind))}});
}

QSymReport giambelli_quasi(const Partition& lambda, const DiagMap& c) {
  Frobenius f = frobenius(lambda);
  const int t = static_cast<int>(f.arms.size());
  Matrix<QSym> m(t, std::vector<QSym>(t));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) m[i][j] = schur_qsym(giambelli_hook(f.arms[i], f.legs[j], c));
  auto tab = diagonal_tableau(SkewShape(lambda), std::map<int, int>(c));
  return make_qsym_report("giambelli-quasi", lambda.str(), {{"schur", schur_qsym(tab)}, {"determinant", determinant(m)}});
}

namespace {

// Upper block rows of the dual Cauchy matrix: row i has 1 on the diagonal and
// entry(i, j) on the right.
void fill_block(Matrix<QSym>& m, int row0, int count, const std::function<QSym(int, int)>& entry) {
  const int eta = static_cast<int>(m.size());
  for (int i = 1; i <= count; ++i)
    for (int j = i; j <= eta; ++j) m[row0 + i - 1][j - 1] = j == i ? QSym::unit() : entry(i, j);
}

std::string box_label(int r, int s) { return "r=" + std::to_string(r) + " s=" + std::to_string(s); }

}  // namespace

QSymReport dual_cauchy_quasi(int r, int s, const DiagMap& c, const DiagMap& d) {
  QSym lhs;
  for (const auto& lam : partitions_in_box(r, s)) {
    Partition star = dual_cauchy_complement(lam, r, s);
    QSym term = schur_qsym(diagonal_tableau(SkewShape(lam), std::map<int, int>(c))) *
                schur_qsym(diagonal_tableau(SkewShape(star), std::map<int, int>(d)));
    lhs += Integer(lam.weight() % 2 ? -1 : 1) * term;
  }
  const int eta = r + s;
  Matrix<QSym> m(eta, std::vector<QSym>(eta));
  fill_block(m, 0, r, [&](int i, int j) { return essential(diag_run(c, i - r, 1, j - i)); });
  fill_block(m, r, s, [&](int i, int j) { return essential(diag_run(d, i - s, 1, j - i)); });
  return make_qsym_report("dual-cauchy-quasi", box_label(r, s), {{"sum", lhs}, {"determinant", determinant(m)}});
}

QSymReport dual_cauchy_antipode(int r, int s, const DiagMap& c, const DiagMap& d) {
  // c lives on (s^r), d on (r^s); lambda runs over (r^s) and lambda* over (s^r).
  QSym lhs;
  for (const auto& lam : partitions_in_box(s, r)) {
    Partition star = dual_cauchy_complement(lam, s, r);
    auto g = anti_transpose(diagonal_tableau(SkewShape(star), std::map<int, int>(c)), r, s);
    auto h = anti_transpose(diagonal_tableau(SkewShape(lam), std::map<int, int>(d)), s, r);
    lhs += Integer(lam.weight() % 2 ? -1 : 1) * (schur_qsym(g) * schur_qsym(h));
  }
  const int eta = r + s;
  Matrix<QSym> m(eta, std::vector<QSym>(eta));
  auto signed_m = [](const DiagMap& a, int i, int j, int shift) {
    auto run = diag_run(a, j - 1 - shift, -1, j - i);
    return Integer((j - i) % 2 ? -1 : 1) * monomial(run);
  };
  fill_block(m, 0, r, [&](int i, int j) { return signed_m(c, i, j, r); });
  fill_block(m, r, s, [&](int i, int j) { return signed_m(d, i, j, s); });
  return make_qsym_report("dual-cauchy-antipode", box_label(r, s), {{"sum", lhs}, {"determinant", determinant(m)}});
}

namespace {

// sum over splittings of the reversed composition of (-1)^{n-m} prod f(piece)
QSym splitting_sum(const Composition& g, QSym (*f)(const Composition&)) {
  Composition r(g.rbegin(), g.rend());
  const int n = static_cast<int>(r.size());
  if (n == 0) return QSym::unit();
  QSym out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    QSym prod = QSym::unit();
    Composition piece{r[0]};
    int m = 0;
    for (int i = 1; i <= n; ++i) {
      if (i == n || (mask >> (i - 1) & 1)) {
        prod = prod * f(piece);
        ++m;
        piece.clear();
      }
      if (i < n) piece.push_back(r[i]);
    }
    out += Integer((n - m) % 2 ? -1 : 1) * prod;
  }
  return out;
}

// Row i: 1 at column i-1, f(g_j, ..., g_i) for j >= i.
Matrix<QSym> hessenberg(const Composition& g, QSym (*f)(const Composition&)) {
  const int n = static_cast<int>(g.size());
  Matrix<QSym> m(n, std::vector<QSym>(n));
  for (int i = 0; i < n; ++i) {
    if (i > 0) m[i][i - 1] = QSym::unit();
    for (int j = i; j < n; ++j) {
      Composition run;
      for (int k = j; k >= i; --k) run.push_back(g[k]);
      m[i][j] = f(run);
    }
  }
  return m;
}

}  // namespace

QSymReport m_by_e(const Composition& g) {
  return make_qsym_report("M-by-E", str(g),
                          {{"M", monomial(g)}, {"splitting", splitting_sum(g, essential)}, {"determinant", determinant(hessenberg(g, essential))}});
}

QSymReport e_by_m(const Composition& g) {
  return make_qsym_report("E-by-M", str(g),
                          {{"E", essential(g)}, {"splitting", splitting_sum(g, monomial)}, {"determinant", determinant(hessenberg(g, monomial))}});
}

}  // namespace smz
