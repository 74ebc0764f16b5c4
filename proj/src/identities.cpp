#include "smz/identities.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace smz {

nlohmann::json IdentityReport::to_json() const {
  auto diag_json = [](const DiagMap& d) {
    nlohmann::json j = nlohmann::json::object();
    for (auto [k, v] : d) j[std::to_string(k)] = v;
    return j;
  };
  nlohmann::json j{{"identity", identity}, {"shape", shape}, {"N", N}};
  if (!diag.empty()) j["diag"] = diag_json(diag);
  if (!diag2.empty()) j["diag2"] = diag_json(diag2);
  if (M >= 0) j["M"] = M;
  j["lhs"] = lhs.str();
  j["rhs"] = rhs.str();
  if (lhs.exact() && rhs.exact()) {
    j["verdict"] = equal ? "equal" : "unequal";
  } else {
    j["verdict"] = equal ? "within-tolerance" : "outside-tolerance";
    j["abs_diff"] = static_cast<double>(abs_diff);
  }
  return j;
}

IdentityReport make_report(std::string identity, std::string shape, const Scalar& lhs, const Scalar& rhs) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.shape = std::move(shape);
  r.lhs = lhs;
  r.rhs = rhs;
  r.equal = lhs == rhs;
  r.abs_diff = std::abs(lhs.real() - rhs.real());
  return r;
}

Rational determinant(Matrix<Rational> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Real determinant(Matrix<Real> a) {
  const int n = static_cast<int>(a.size());
  Real det = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (a[p][k] == 0) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      Real f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

std::vector<int> diag_run(const DiagMap& a, int start, int step, int len) {
  std::vector<int> out;
  for (int k = 0; k < len; ++k) {
    auto it = a.find(start + k * step);
    if (it == a.end()) throw std::invalid_argument("missing diagonal value a_" + std::to_string(start + k * step));
    out.push_back(it->second);
  }
  return out;
}

Matrix<Rational> jt_matrix(const SkewShape& s, const DiagMap& a, long N, RimKind kind) {
  const bool H = kind == RimKind::H;
  Partition lam = H ? s.outer() : conjugate(s.outer());
  Partition mu = H ? s.inner() : conjugate(s.inner());
  const int n = lam.length();
  Matrix<Rational> m(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int L = lam.part(i) - mu.part(j) - i + j;
      if (L < 0) {
        m[i - 1][j - 1] = 0;
      } else if (L == 0) {
        m[i - 1][j - 1] = 1;
      } else if (H) {
        m[i - 1][j - 1] = mzsv_trunc<Rational>(diag_run(a, mu.part(j) - j + 1, 1, L), N);
      } else {
        m[i - 1][j - 1] = mzv_trunc<Rational>(diag_run(a, -mu.part(j) + j - 1, -1, L), N);
      }
    }
  return m;
}

IdentityReport jacobi_trudi(const SkewShape& s, const DiagMap& a, long N, RimKind kind) {
  Rational lhs = smzv_direct<Rational>(diagonal_tableau(s, std::map<int, int>(a)), static_cast<int>(N));
  Rational rhs = determinant(jt_matrix(s, a, N, kind));
  auto r = make_report(kind == RimKind::H ? "jacobi-trudi-H" : "jacobi-trudi-E", s.str(), lhs, rhs);
  r.diag = a;
  r.N = N;
  return r;
}

Tableau<int> giambelli_hook(int p, int q, const DiagMap& a) {
  std::vector<int> parts{p};
  for (int k = 0; k < q; ++k) parts.push_back(1);
  return diagonal_tableau(SkewShape(Partition(parts)), std::map<int, int>(a));
}

Matrix<Rational> giambelli_matrix(const Partition& lambda, const DiagMap& a, long N) {
  Frobenius f = frobenius(lambda);
  const int t = static_cast<int>(f.arms.size());
  Matrix<Rational> m(t, std::vector<Rational>(t));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) m[i][j] = smzv_trunc<Rational>(giambelli_hook(f.arms[i], f.legs[j], a), N);
  return m;
}

IdentityReport giambelli(const Partition& lambda, const DiagMap& a, long N) {
  Rational lhs = smzv_direct<Rational>(diagonal_tableau(SkewShape(lambda), std::map<int, int>(a)), static_cast<int>(N));
  Rational rhs = determinant(giambelli_matrix(lambda, a, N));
  auto r = make_report("giambelli", lambda.str(), lhs, rhs);
  r.diag = a;
  r.N = N;
  return r;
}

Partition dual_cauchy_complement(const Partition& lambda, int r, int s) {
  Partition c = conjugate(lambda);
  std::vector<int> out;
  for (int k = s; k >= 1; --k) out.push_back(r - c.part(k));
  return Partition(out);
}

Rational dual_cauchy_lhs(int r, int s, const DiagMap& c, const DiagMap& d, long N, long M) {
  Rational total = 0;
  for (const auto& lam : partitions_in_box(r, s)) {
    Partition star = dual_cauchy_complement(lam, r, s);
    Rational a = smzv_direct<Rational>(diagonal_tableau(SkewShape(lam), std::map<int, int>(c)), static_cast<int>(N));
    Rational b = smzv_direct<Rational>(diagonal_tableau(SkewShape(star), std::map<int, int>(d)), static_cast<int>(M));
    Rational term = a * b;
    if (lam.weight() % 2) term = -term;
    total += term;
  }
  return total;
}

Matrix<Rational> dual_cauchy_matrix(int r, int s, const DiagMap& c, const DiagMap& d, long N, long M) {
  const int eta = r + s;
  Matrix<Rational> m(eta, std::vector<Rational>(eta, Rational(0)));
  auto fill = [&](int row0, int count, int shift, const DiagMap& vals, long bound) {
    for (int i = 1; i <= count; ++i)
      for (int j = i; j <= eta; ++j)
        m[row0 + i - 1][j - 1] = j == i ? Rational(1) : mzsv_trunc<Rational>(diag_run(vals, i - shift, 1, j - i), bound);
  };
  fill(0, r, r, c, N);
  fill(r, s, s, d, M);
  return m;
}

IdentityReport dual_cauchy(int r, int s, const DiagMap& c, const DiagMap& d, long N, long M) {
  Rational lhs = dual_cauchy_lhs(r, s, c, d, N, M);
  Rational rhs = determinant(dual_cauchy_matrix(r, s, c, d, N, M));
  auto rep = make_report("dual-cauchy", "r=" + std::to_string(r) + " s=" + std::to_string(s), lhs, rhs);
  rep.diag = c;
  rep.diag2 = d;
  rep.N = N;
  rep.M = M;
  return rep;
}

Rational rim_expansion(const Tableau<int>& t, long N, RimKind kind) {
  Rational total = 0;
  for (const auto& d : rim_decompositions(t.shape(), kind)) {
    Rational term = d.sign;
    for (const auto& args : theta_contents(d, t))
      term *= kind == RimKind::H ? mzsv_trunc<Rational>(args, N) : mzv_trunc<Rational>(args, N);
    total += term;
  }
  return total;
}

IdentityReport rim_sum(const Partition& lambda, const DiagMap& a, long N, RimKind kind) {
  SkewShape s(lambda);
  auto t = diagonal_tableau(s, std::map<int, int>(a));
  Rational lhs = smzv_direct<Rational>(t, static_cast<int>(N));
  Rational rhs = rim_expansion(t, N, kind);
  Rational det = determinant(jt_matrix(s, a, N, kind));
  auto r = make_report(kind == RimKind::H ? "rim-sum-H" : "rim-sum-E", lambda.str(), lhs, rhs);
  r.equal = r.equal && rhs == det;
  r.diag = a;
  r.N = N;
  return r;
}

DiagonalDirectSum::DiagonalDirectSum(const SkewShape& s, int N) {
  auto [lo, hi] = s.content_range();
  lo_ = lo;
  const int width = s.size() ? hi - lo + 1 : 0;
  std::map<std::vector<std::uint64_t>, std::int64_t> groups;
  std::vector<int> diag;
  for (Cell c : s.cells()) diag.push_back(c.content() - lo);
  for_each_ssyt(s, N, [&](const std::vector<int>& m) {
    std::vector<std::uint64_t> p(width, 1);
    for (std::size_t k = 0; k < m.size(); ++k) p[diag[k]] *= static_cast<std::uint64_t>(m[k]);
    ++groups[p];
  });
  weights_.assign(groups.begin(), groups.end());
}

Rational DiagonalDirectSum::operator()(const DiagMap& a) const {
  if (weights_.empty()) return 0;
  const int width = static_cast<int>(weights_.front().first.size());
  std::vector<unsigned long> e(width);
  for (int k = 0; k < width; ++k) {
    auto it = a.find(lo_ + k);
    if (it == a.end()) throw std::invalid_argument("missing diagonal value a_" + std::to_string(lo_ + k));
    if (it->second < 0) throw std::invalid_argument("direct sum plan needs nonnegative integer exponents");
    e[k] = static_cast<unsigned long>(it->second);
  }
  // Common denominator prod_k L_k^{e_k} with L_k the lcm of the diagonal products.
  std::vector<std::uint64_t> lcm(width, 1);
  for (const auto& [p, cnt] : weights_)
    for (int k = 0; k < width; ++k) lcm[k] = std::lcm(lcm[k], p[k]);
  Integer num = 0, term, f;
  for (const auto& [p, cnt] : weights_) {
    term = static_cast<long>(cnt);
    for (int k = 0; k < width; ++k) {
      if (e[k] == 0 || p[k] == lcm[k]) continue;
      mpz_ui_pow_ui(f.get_mpz_t(), lcm[k] / p[k], e[k]);
      term *= f;
    }
    num += term;
  }
  Integer den = 1;
  for (int k = 0; k < width; ++k) {
    mpz_ui_pow_ui(f.get_mpz_t(), lcm[k], e[k]);
    den *= f;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<DiagMap> all_diagonal_maps(int lo, int hi, const std::vector<int>& values) {
  std::vector<DiagMap> out;
  DiagMap cur;
  std::function<void(int)> rec = [&](int k) {
    if (k > hi) {
      out.push_back(cur);
      return;
    }
    for (int v : values) {
      cur[k] = v;
      rec(k + 1);
    }
  };
  rec(lo);
  return out;
}

std::vector<DiagMap> all_diagonal_maps(const SkewShape& s, const std::vector<int>& values) {
  auto [lo, hi] = s.content_range();
  return all_diagonal_maps(lo, hi, values);
}

namespace {

void jt_shape(const SkewShape& s, const std::vector<int>& values, const std::vector<int>& Ns,
              const std::function<void(IdentityReport&&)>& out) {
  auto maps = all_diagonal_maps(s, values);
  for (int N : Ns) {
    DiagonalDirectSum direct(s, N);
    for (const auto& a : maps) {
      Rational lhs = direct(a);
      for (RimKind kind : {RimKind::H, RimKind::E}) {
        auto r = make_report(kind == RimKind::H ? "jacobi-trudi-H" : "jacobi-trudi-E", s.str(), lhs,
                             determinant(jt_matrix(s, a, N, kind)));
        r.diag = a;
        r.N = N;
        out(std::move(r));
      }
    }
  }
}

}  // namespace

SweepSummary jt_sweep(int max_weight, const std::vector<int>& values, const std::vector<int>& Ns,
                      const std::function<void(const IdentityReport&)>& sink) {
  SweepSummary sum;
  for (int n = 1; n <= max_weight; ++n)
    for (const auto& lam : partitions_of(n))
      jt_shape(SkewShape(lam), values, Ns, [&](IdentityReport&& r) {
        ++sum.instances;
        if (!r.equal) {
          ++sum.failures;
          if (sum.failed.size() < 20) sum.failed.push_back(r);
        }
        if (sink) sink(r);
      });
  return sum;
}

const std::vector<SkewShape>& skew_battery() {
  static const std::vector<SkewShape> b{
      {Partition{2, 1}, Partition{1}},       {Partition{2, 2}, Partition{1}},
      {Partition{3, 2}, Partition{1}},       {Partition{3, 3}, Partition{2}},
      {Partition{2, 2, 2}, Partition{1, 1}}, {Partition{3, 2, 1}, Partition{1}},
      {Partition{3, 2, 1}, Partition{2, 1}}, {Partition{4, 3, 2}, Partition{2, 1}},
      {Partition{3, 3}, Partition{1}},       {Partition{4, 2, 1}, Partition{2, 1}},
  };
  return b;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "skew", "giambelli", "dual-cauchy", "rim", "full"};
  return names;
}

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

SweepTask jt_task(SkewShape s, std::vector<int> values, std::vector<int> Ns) {
  return [=] {
    std::vector<IdentityReport> out;
    jt_shape(s, values, Ns, [&](IdentityReport&& r) { out.push_back(std::move(r)); });
    return out;
  };
}

void add_core(std::vector<SweepTask>& tasks) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) tasks.push_back(jt_task(SkewShape(lam), {1, 2, 3}, range(0, 5)));
}

void add_skew(std::vector<SweepTask>& tasks) {
  for (const auto& s : skew_battery()) tasks.push_back(jt_task(s, {1, 2, 3}, range(0, 4)));
}

void add_giambelli(std::vector<SweepTask>& tasks) {
  std::vector<Partition> shapes;
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) shapes.push_back(lam);
  shapes.push_back(Partition{4, 3, 3, 2});
  for (const auto& lam : shapes)
    tasks.push_back([lam] {
      std::vector<IdentityReport> out;
      for (const auto& a : all_diagonal_maps(SkewShape(lam), {1, 2}))
        for (int N : range(0, 4)) out.push_back(giambelli(lam, a, N));
      return out;
    });
}

void add_dual_cauchy(std::vector<SweepTask>& tasks) {
  for (int r = 1; r <= 2; ++r)
    for (int s = 1; s <= 3; ++s)
      tasks.push_back([r, s] {
        std::vector<IdentityReport> out;
        auto cs = all_diagonal_maps(1 - r, s - 1, {1, 2});
        auto ds = all_diagonal_maps(1 - s, r - 1, {1, 2});
        for (auto [N, M] : {std::pair{0, 2}, std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}})
          for (const auto& c : cs)
            for (const auto& d : ds) out.push_back(dual_cauchy(r, s, c, d, N, M));
        return out;
      });
}

void add_rim(std::vector<SweepTask>& tasks) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_of(n))
      tasks.push_back([lam] {
        std::vector<IdentityReport> out;
        for (const auto& a : all_diagonal_maps(SkewShape(lam), {1, 2}))
          for (int N : {3, 5})
            for (RimKind k : {RimKind::H, RimKind::E}) out.push_back(rim_sum(lam, a, N, k));
        return out;
      });
  tasks.push_back([] {
    std::vector<IdentityReport> out;
    const Partition lam{4, 3, 3, 2};
    const std::vector<DiagMap> maps{
        {{-3, 2}, {-2, 2}, {-1, 2}, {0, 2}, {1, 2}, {2, 2}, {3, 2}},
        {{-3, 1}, {-2, 2}, {-1, 3}, {0, 2}, {1, 1}, {2, 3}, {3, 2}},
        {{-3, 3}, {-2, 1}, {-1, 1}, {0, 2}, {1, 3}, {2, 1}, {3, 2}},
    };
    for (const auto& a : maps)
      for (int N : {3, 5})
        for (RimKind k : {RimKind::H, RimKind::E}) out.push_back(rim_sum(lam, a, N, k));
    return out;
  });
}

}  // namespace

std::vector<SweepTask> suite_tasks(const std::string& suite) {
  std::vector<SweepTask> tasks;
  const bool full = suite == "full";
  if (full || suite == "core") add_core(tasks);
  if (full || suite == "skew") add_skew(tasks);
  if (full || suite == "giambelli") add_giambelli(tasks);
  if (full || suite == "dual-cauchy") add_dual_cauchy(tasks);
  if (full || suite == "rim") add_rim(tasks);
  if (tasks.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return tasks;
}

std::vector<IdentityReport> run_tasks(const std::vector<SweepTask>& tasks, int jobs) {
  std::vector<std::vector<IdentityReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      try {
        results[k] = tasks[k]();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<IdentityReport> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace smz
