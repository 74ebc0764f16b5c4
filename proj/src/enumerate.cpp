#include "smz/enumerate.hpp"

#include <algorithm>
#include <set>

namespace smz {

SsytLayout::SsytLayout(const SkewShape& s) {
  for (Cell c : s.cells()) {
    left.push_back(s.index_of({c.row, c.col - 1}));
    above.push_back(s.index_of({c.row - 1, c.col}));
    int run = 0;
    while (s.contains({c.row + run + 1, c.col})) ++run;
    below_run.push_back(run);
  }
}

std::int64_t ssyt_count(const SkewShape& s, int N) {
  std::int64_t n = 0;
  for_each_ssyt(s, N, [&](const std::vector<int>&) { ++n; });
  return n;
}

std::vector<std::vector<int>> linear_extensions(const SkewShape& s) {
  const int n = s.size();
  SsytLayout lay(s);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k < n; ++k) {
      if (used[k]) continue;
      if (lay.left[k] >= 0 && !used[lay.left[k]]) continue;
      if (lay.above[k] >= 0 && !used[lay.above[k]]) continue;
      used[k] = true;
      cur.push_back(k);
      rec();
      cur.pop_back();
      used[k] = false;
    }
  };
  rec();
  return out;
}

std::vector<BlockedSequence> preceq_set(const SkewShape& s, Variant v) {
  const int n = s.size();
  const auto& cells = s.cells();
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<std::vector<int>> blocks;
  for (const auto& ext : linear_extensions(s)) {
    std::function<void(int)> rec = [&](int p) {
      if (p == n) {
        auto key = blocks;
        for (auto& b : key) std::sort(b.begin(), b.end());
        seen.insert(std::move(key));
        return;
      }
      std::vector<int> block;
      std::set<int> lines;
      for (int e = p; e < n; ++e) {
        Cell c = cells[ext[e]];
        int line = v == Variant::direct ? c.col : c.row;
        if (!lines.insert(line).second) break;
        block.push_back(ext[e]);
        blocks.push_back(block);
        rec(e + 1);
        blocks.pop_back();
      }
    };
    rec(0);
  }
  std::vector<BlockedSequence> out;
  for (const auto& b : seen) {
    BlockedSequence bs{b, 1};
    if (v == Variant::conjugate && (n - static_cast<int>(b.size())) % 2 != 0) bs.sign = -1;
    out.push_back(std::move(bs));
  }
  return out;
}

int permutation_sign(const std::vector<int>& sigma) {
  int sign = 1;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

namespace {

std::vector<RimDecomposition> h_rims(const SkewShape& s) {
  const Partition& lam = s.outer();
  const int r = lam.length();
  std::vector<int> target(r), mu(r);
  for (int i = 1; i <= r; ++i) {
    target[i - 1] = lam.part(i);
    mu[i - 1] = s.inner().part(i);
  }
  std::vector<RimDecomposition> out;
  std::vector<std::vector<Cell>> ribs;

  std::function<void(int, std::vector<int>&)> rec = [&](int i, std::vector<int>& kappa) {
    if (i > r) {
      if (kappa != target) return;
      RimDecomposition d;
      d.shape = s;
      d.kind = RimKind::H;
      d.ribbons = ribs;
      for (int k = 1; k <= r; ++k) {
        int val = static_cast<int>(ribs[k - 1].size()) + mu[k - 1] - k;
        int j = 0;
        for (int c = 1; c <= r; ++c)
          if (lam.part(c) - c == val) j = c;
        if (j == 0) return;
        d.sigma.push_back(j);
      }
      std::vector<int> sorted = d.sigma;
      std::sort(sorted.begin(), sorted.end());
      for (int k = 0; k < r; ++k)
        if (sorted[k] != k + 1) return;
      d.sign = permutation_sign(d.sigma);
      out.push_back(std::move(d));
      return;
    }
    ribs.emplace_back();
    rec(i + 1, kappa);
    ribs.pop_back();
    // Nonempty ribbon with lowest row i and rows t..i; consecutive rows overlap in one column.
    for (int t = i; t >= 1; --t) {
      if (t < i) {
        // rows t+1..i are fixed by the overlap rule
        bool ok = true;
        for (int k = t + 1; k <= i && ok; ++k) {
          int a = kappa[k - 2] + 1;
          ok = a > kappa[k - 1] && a <= target[k - 1];
        }
        if (!ok) break;
      }
      int top_lo = kappa[t - 1] + 1, top_hi = target[t - 1];
      for (int at = top_lo; at <= top_hi; ++at) {
        std::vector<int> nk = kappa;
        nk[t - 1] = at;
        for (int k = t + 1; k <= i; ++k) nk[k - 1] = kappa[k - 2] + 1;
        bool part = true;
        for (int k = 1; k < r && part; ++k) part = nk[k - 1] >= nk[k];
        if (!part) continue;
        std::vector<Cell> cells;
        for (int k = t; k <= i; ++k)
          for (int j = kappa[k - 1] + 1; j <= nk[k - 1]; ++j) cells.push_back({k, j});
        std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.content() < b.content(); });
        ribs.push_back(std::move(cells));
        rec(i + 1, nk);
        ribs.pop_back();
      }
    }
  };
  std::vector<int> start = mu;
  rec(1, start);
  return out;
}

}  // namespace

std::vector<RimDecomposition> rim_decompositions(const SkewShape& s, RimKind kind) {
  if (kind == RimKind::H) return h_rims(s);
  auto conj = h_rims(s.conjugate());
  for (auto& d : conj) {
    d.shape = s;
    d.kind = RimKind::E;
    for (auto& rib : d.ribbons)
      for (auto& c : rib) c = Cell{c.col, c.row};
  }
  return conj;
}

Tableau<int> rim_tableau(const RimDecomposition& d) {
  std::vector<int> vals(d.shape.size(), 0);
  for (std::size_t i = 0; i < d.ribbons.size(); ++i)
    for (Cell c : d.ribbons[i]) vals[d.shape.index_of(c)] = static_cast<int>(i) + 1;
  return Tableau<int>(d.shape, vals);
}

namespace {

// Row sequences for one path: weakly increasing (H) or strictly increasing (E).
void sequences(int len, int N, bool strict, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= N; ++v) {
      cur.push_back(v);
      rec(strict ? v + 1 : v);
      cur.pop_back();
    }
  };
  rec(1);
}

std::int64_t binom_capped(std::int64_t n, std::int64_t k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

void for_each_pattern(const Partition& lambda, int N, RimKind kind, PatternSubset subset,
                      const std::function<void(int, const std::vector<int>&)>& visit, std::int64_t cap) {
  SkewShape s(lambda);
  const bool H = kind == RimKind::H;
  auto rims = rim_decompositions(s, kind);
  const int paths = H ? lambda.length() : lambda.part(1);

  std::int64_t total = 0;
  for (const auto& d : rims) {
    std::int64_t prod = 1;
    for (const auto& rib : d.ribbons) {
      std::int64_t len = static_cast<std::int64_t>(rib.size());
      std::int64_t c = H ? binom_capped(N - 1 + len, len, cap) : binom_capped(N, len, cap);
      prod = std::min<std::int64_t>(cap + 1, prod * c);
    }
    total = std::min<std::int64_t>(cap + 1, total + prod);
  }
  if (total > cap) throw std::runtime_error("lattice pattern count exceeds cap");

  std::vector<int> fill(s.size(), 0);
  for (const auto& d : rims) {
    std::vector<std::vector<std::vector<int>>> seqs(paths);
    for (int i = 0; i < paths; ++i) sequences(static_cast<int>(d.ribbons[i].size()), N, !H, seqs[i]);
    // Per path and row y (1..N+1): occupied x interval [lo, hi].
    auto occupancy = [&](int i, const std::vector<int>& rows, std::vector<int>& lo, std::vector<int>& hi) {
      int x0 = paths + 1 - (i + 1);
      lo.assign(N + 2, 0);
      hi.assign(N + 2, 0);
      for (int y = 1; y <= N + 1; ++y) {
        int lt = 0, le = 0;
        for (int j : rows) {
          lt += j < y;
          le += j <= y;
        }
        lo[y] = x0 + lt;
        hi[y] = H ? x0 + le : x0 + lt;
      }
    };
    std::vector<int> choice(paths, 0);
    std::vector<std::vector<int>> lo(paths), hi(paths);
    std::function<void(int)> rec = [&](int i) {
      if (i == paths) {
        bool meet = false;
        const int ymax = H ? N : N + 1;
        for (int a = 0; a < paths && !meet; ++a)
          for (int b = a + 1; b < paths && !meet; ++b)
            for (int y = 1; y <= ymax && !meet; ++y) meet = lo[a][y] <= hi[b][y] && lo[b][y] <= hi[a][y];
        if (subset == PatternSubset::intersecting && !meet) return;
        if (subset == PatternSubset::non_intersecting && meet) return;
        for (int p = 0; p < paths; ++p) {
          const auto& rows = seqs[p][choice[p]];
          for (std::size_t k = 0; k < rows.size(); ++k) fill[s.index_of(d.ribbons[p][k])] = rows[k];
        }
        visit(d.sign, fill);
        return;
      }
      for (std::size_t c = 0; c < seqs[i].size(); ++c) {
        choice[i] = static_cast<int>(c);
        occupancy(i, seqs[i][c], lo[i], hi[i]);
        rec(i + 1);
      }
    };
    rec(0);
  }
}

FormalKey formal_key(const std::vector<int>& var, const std::vector<int>& fill) {
  std::map<int, std::int64_t> prod;
  for (std::size_t k = 0; k < var.size(); ++k) {
    auto [it, fresh] = prod.emplace(var[k], 1);
    it->second *= fill[k];
  }
  FormalKey key;
  for (auto [v, p] : prod)
    if (p > 1) key.push_back({v, p});
  return key;
}

void formal_add(FormalSum& acc, const FormalKey& key, std::int64_t coeff) {
  auto& c = acc[key];
  c += coeff;
  if (c == 0) acc.erase(key);
}

FormalSum formal_ssyt_sum(const SkewShape& s, int N, const std::vector<int>& var) {
  FormalSum acc;
  for_each_ssyt(s, N, [&](const std::vector<int>& m) { formal_add(acc, formal_key(var, m), 1); });
  return acc;
}

FormalSum formal_pattern_sum(const Partition& lambda, int N, RimKind kind, PatternSubset subset,
                             const std::vector<int>& var) {
  FormalSum acc;
  for_each_pattern(lambda, N, kind, subset,
                   [&](int sign, const std::vector<int>& fill) { formal_add(acc, formal_key(var, fill), sign); });
  return acc;
}

std::vector<int> cell_variables(const SkewShape& s) {
  std::vector<int> v(s.size());
  for (int k = 0; k < s.size(); ++k) v[k] = k;
  return v;
}

std::vector<int> diagonal_variables(const SkewShape& s) {
  std::vector<int> v;
  for (Cell c : s.cells()) v.push_back(c.content());
  return v;
}

}  // namespace smz
