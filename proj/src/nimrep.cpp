#include "ftcat/nimrep.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

#include "ftcat/error.hpp"

namespace ftcat {

namespace {

using Flat = std::vector<std::int64_t>;
using Key = std::vector<std::int64_t>;

std::size_t z(int i) { return static_cast<std::size_t>(i); }

// Largest integer k with k <= a.
std::int64_t floor_real(const RealAlgebraic& a) {
  auto k = static_cast<std::int64_t>(a.approx()) - 1;
  while (cmp(RealAlgebraic(Rational(static_cast<long>(k + 1))), a) != Order::Greater) ++k;
  while (cmp(RealAlgebraic(Rational(static_cast<long>(k))), a) == Order::Greater) --k;
  return k;
}

// Minimal polynomial of the basis element i inside the ring, as integer
// coefficients (low degree first). Found as the first linear dependence
// among 1, b, b^2, ...
std::vector<Integer> ring_minpoly(const BasedRing& r, int i) {
  const int n = r.rank();
  std::vector<std::vector<Rational>> powers;
  std::vector<Rational> cur(z(n));
  for (int u : r.unit()) cur[z(u)] = 1;
  for (int deg = 0; deg <= n; ++deg) {
    powers.push_back(cur);
    // kernel of the n x (deg+1) matrix whose columns are the powers
    const int cols = deg + 1;
    QMatrix m(z(n), std::vector<Rational>(z(cols)));
    for (int row = 0; row < n; ++row)
      for (int c = 0; c < cols; ++c) m[z(row)][z(c)] = powers[z(c)][z(row)];
    std::vector<int> pivot_col;
    int prow = 0;
    for (int c = 0; c < cols && prow < n; ++c) {
      int sel = -1;
      for (int row = prow; row < n; ++row)
        if (m[z(row)][z(c)] != 0) sel = row;
      if (sel < 0) continue;
      std::swap(m[z(sel)], m[z(prow)]);
      const Rational inv = 1 / m[z(prow)][z(c)];
      for (auto& x : m[z(prow)]) x *= inv;
      for (int row = 0; row < n; ++row) {
        if (row == prow || m[z(row)][z(c)] == 0) continue;
        const Rational f = m[z(row)][z(c)];
        for (int cc = 0; cc < cols; ++cc) m[z(row)][z(cc)] -= f * m[z(prow)][z(cc)];
      }
      pivot_col.push_back(c);
      ++prow;
    }
    if (static_cast<int>(pivot_col.size()) < cols) {
      // the new column deg is free; earlier columns were independent
      std::vector<Rational> coeffs(z(cols));
      coeffs[z(deg)] = 1;
      for (std::size_t t = 0; t < pivot_col.size(); ++t) coeffs[z(pivot_col[t])] = -m[t][z(deg)];
      Integer den = 1;
      for (auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
      std::vector<Integer> out;
      for (auto& c : coeffs) out.push_back(Integer(c * den));
      return out;
    }
    std::vector<Rational> next(z(n));
    for (int j = 0; j < n; ++j)
      if (cur[z(j)] != 0)
        for (int k = 0; k < n; ++k)
          if (r.N(i, j, k) != 0) next[z(k)] += cur[z(j)] * static_cast<long>(r.N(i, j, k));
    cur = std::move(next);
  }
  fail(ErrorCode::InconsistentData, "no polynomial relation found for " + r.labels()[z(i)]);
}

Flat mul(const Flat& a, const Flat& b, int m) {
  Flat c(z(m * m), 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const auto axy = a[z(x * m + y)];
      if (axy == 0) continue;
      for (int w = 0; w < m; ++w) c[z(x * m + w)] += axy * b[z(y * m + w)];
    }
  return c;
}

bool annihilates(const std::vector<Integer>& p, const Flat& r, int m) {
  // Horner in 128-bit; degrees and entries here are small.
  std::vector<__int128> acc(z(m * m), 0);
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
    std::vector<__int128> next(z(m * m), 0);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        const auto axy = acc[z(x * m + y)];
        if (axy == 0) continue;
        for (int w = 0; w < m; ++w) next[z(x * m + w)] += axy * r[z(y * m + w)];
      }
    const auto c = static_cast<__int128>(p[z(d)].get_si());
    for (int x = 0; x < m; ++x) next[z(x * m + x)] += c;
    acc = std::move(next);
  }
  return std::all_of(acc.begin(), acc.end(), [](__int128 v) { return v == 0; });
}

bool support_connected(const std::vector<Flat>& R, int m) {
  IntMatrix s(z(m), std::vector<std::int64_t>(z(m), 0));
  for (auto& f : R)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) s[z(x)][z(y)] += f[z(x * m + y)];
  return is_irreducible(s);
}

IntMatrix to_matrix(const Flat& f, int m) {
  IntMatrix out(z(m), std::vector<std::int64_t>(z(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) out[z(x)][z(y)] = f[z(x * m + y)];
  return out;
}

struct Step {
  enum Kind { Enumerate, Derive, Transpose } kind;
  int target;
  int i = -1, j = -1;
  std::vector<std::pair<int, int>> checks;
};

std::vector<Step> make_plan(const BasedRing& r, bool duality) {
  const int n = r.rank();
  const int unit = r.unit_index();
  std::vector<bool> known(z(n), false), checked(z(n * n), false);
  known[z(unit)] = true;
  std::vector<Step> plan;
  auto attach_checks = [&](Step& s) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (checked[z(i * n + j)] || !known[z(i)] || !known[z(j)]) continue;
        bool ready = true;
        for (int k = 0; k < n; ++k)
          if (r.N(i, j, k) != 0 && !known[z(k)]) ready = false;
        if (!ready) continue;
        checked[z(i * n + j)] = true;
        if (i != unit && j != unit) s.checks.emplace_back(i, j);
      }
  };
  auto push = [&](Step s) {
    known[z(s.target)] = true;
    attach_checks(s);
    plan.push_back(std::move(s));
  };
  while (true) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 0; i < n && !progress; ++i) {
        if (duality && known[z(i)] && !known[z(r.star(i))]) {
          push({Step::Transpose, r.star(i), i, -1, {}});
          progress = true;
        }
      }
      for (int i = 0; i < n && !progress; ++i)
        for (int j = 0; j < n && !progress; ++j) {
          if (!known[z(i)] || !known[z(j)]) continue;
          int unknown = -1, count = 0;
          for (int k = 0; k < n; ++k)
            if (r.N(i, j, k) != 0 && !known[z(k)]) {
              unknown = k;
              ++count;
            }
          if (count == 1) {
            push({Step::Derive, unknown, i, j, {}});
            progress = true;
          }
        }
    }
    int g = -1;
    for (int k = 0; k < n && g < 0; ++k)
      if (!known[z(k)]) g = k;
    if (g < 0) break;
    push({Step::Enumerate, g, -1, -1, {}});
  }
  return plan;
}

/// Exhaustive search for modules of one fixed rank.
class Search {
 public:
  Search(const BasedRing& r, const FpDims& fp, bool duality, int m) : r_(r), duality_(duality), m_(m) {
    n_ = r.rank();
    plan_ = make_plan(r, duality);
    R_.assign(z(n_), Flat(z(m * m), 0));
    for (int x = 0; x < m; ++x) R_[z(r.unit_index())][z(x * m + x)] = 1;
    const RealAlgebraic total = fp.generator;
    RealAlgebraic spread(Rational(1));
    for (int t = 1; t < m; ++t) spread = real_mul(spread, total);
    for (const Step& s : plan_) {
      if (s.kind != Step::Enumerate) continue;
      const RealAlgebraic d = to_real(fp.d[z(s.target)]);
      Bounds b;
      b.minpoly = ring_minpoly(r, s.target);
      b.symmetric = duality && r.star(s.target) == s.target;
      if (duality) {
        // R_i[a][b]^2 <= (R_i R_i^T)[a][a] <= d_i^2
        b.entry = floor_real(d);
        b.square = floor_real(real_mul(d, d));
      } else {
        // R_i[a][b] <= d_i v_a / v_b <= d_i D^(m-1) on a strongly connected support
        b.entry = floor_real(real_mul(d, spread));
        b.diag = floor_real(d);
        b.square = -1;
        // (R_i R_i*)[a][a] <= d_i^2 once R_i* is available
        const int partner = r.star(s.target);
        bool partner_known = partner == s.target || partner == r.unit_index();
        for (const Step& q : plan_) {
          if (&q == &s) break;
          if (q.target == partner) partner_known = true;
        }
        if (partner_known) {
          b.partner = partner;
          b.pair = floor_real(real_mul(d, d));
        }
      }
      bounds_[s.target] = std::move(b);
    }
  }

  void run() { step(0); }
  std::map<Key, ZPlusModule>& found() { return found_; }

 private:
  struct Bounds {
    std::vector<Integer> minpoly;
    std::int64_t entry = 0, square = -1, diag = -1, pair = -1;
    int partner = -1;
    bool symmetric = false;
  };

  bool relations_hold(const Step& s) const {
    for (auto [i, j] : s.checks) {
      Flat lhs = mul(R_[z(i)], R_[z(j)], m_);
      for (int k = 0; k < n_; ++k) {
        const auto c = r_.N(i, j, k);
        if (c == 0) continue;
        for (int t = 0; t < m_ * m_; ++t) lhs[z(t)] -= c * R_[z(k)][z(t)];
      }
      if (std::any_of(lhs.begin(), lhs.end(), [](std::int64_t v) { return v != 0; })) return false;
    }
    return true;
  }

  void step(std::size_t s) {
    if (s == plan_.size()) {
      if (!support_connected(R_, m_)) return;
      ZPlusModule mod;
      mod.rank = m_;
      for (auto& f : R_) mod.action.push_back(to_matrix(f, m_));
      ZPlusModule c = canonical_form(mod);
      Key key;
      for (auto& a : c.action)
        for (auto& row : a) key.insert(key.end(), row.begin(), row.end());
      found_.emplace(std::move(key), std::move(c));
      return;
    }
    const Step& st = plan_[s];
    Flat& t = R_[z(st.target)];
    switch (st.kind) {
      case Step::Transpose:
        for (int x = 0; x < m_; ++x)
          for (int y = 0; y < m_; ++y) t[z(x * m_ + y)] = R_[z(st.i)][z(y * m_ + x)];
        if (relations_hold(st)) step(s + 1);
        return;
      case Step::Derive: {
        Flat p = mul(R_[z(st.i)], R_[z(st.j)], m_);
        for (int k = 0; k < n_; ++k) {
          const auto c = r_.N(st.i, st.j, k);
          if (c == 0 || k == st.target) continue;
          for (int q = 0; q < m_ * m_; ++q) p[z(q)] -= c * R_[z(k)][z(q)];
        }
        const auto c = r_.N(st.i, st.j, st.target);
        for (int q = 0; q < m_ * m_; ++q) {
          if (p[z(q)] < 0 || p[z(q)] % c != 0) return;
          t[z(q)] = p[z(q)] / c;
        }
        if (relations_hold(st)) step(s + 1);
        return;
      }
      case Step::Enumerate:
        std::fill(t.begin(), t.end(), 0);
        fill_cell(s, 0, 0);
        return;
    }
  }

  std::int64_t row_square(const Flat& t, int a) const {
    std::int64_t sq = 0;
    for (int y = 0; y < m_; ++y) sq += t[z(a * m_ + y)] * t[z(a * m_ + y)];
    return sq;
  }
  std::int64_t col_square(const Flat& t, int b) const {
    std::int64_t sq = 0;
    for (int x = 0; x < m_; ++x) sq += t[z(x * m_ + b)] * t[z(x * m_ + b)];
    return sq;
  }

  // (R_i R_i*)[a][a]
  std::int64_t pair_sum(const Flat& t, const Flat& partner, int a) const {
    std::int64_t s = 0;
    for (int y = 0; y < m_; ++y) s += t[z(a * m_ + y)] * partner[z(y * m_ + a)];
    return s;
  }

  void fill_cell(std::size_t s, int a, int b) {
    const Step& st = plan_[s];
    const Bounds& bd = bounds_.at(st.target);
    Flat& t = R_[z(st.target)];
    if (a == m_) {
      for (int y = 0; y < m_; ++y) {
        const auto cs = col_square(t, y);
        if (cs == 0) return;
      }
      if (bd.partner == st.target)
        for (int x = 0; x < m_; ++x) {
          const auto p = pair_sum(t, t, x);
          if (p == 0 || p > bd.pair) return;
        }
      if (!annihilates(bd.minpoly, t, m_)) return;
      if (relations_hold(st)) step(s + 1);
      return;
    }
    if (b == m_) {
      // every row is hit by R_i R_i* >= 1 on the diagonal
      const auto rs = row_square(t, a);
      if (rs == 0 || (bd.square >= 0 && rs > bd.square)) return;
      if (bd.partner >= 0 && bd.partner != st.target) {
        const auto p = pair_sum(t, R_[z(bd.partner)], a);
        if (p == 0 || p > bd.pair) return;
      }
      fill_cell(s, a + 1, bd.symmetric ? a + 1 : 0);
      return;
    }
    const std::int64_t top = (a == b && bd.diag >= 0) ? bd.diag : bd.entry;
    for (std::int64_t v = 0; v <= top; ++v) {
      t[z(a * m_ + b)] = v;
      if (bd.partner == st.target && b <= a && v * t[z(b * m_ + a)] > bd.pair) break;
      if (bd.symmetric) t[z(b * m_ + a)] = v;
      if (bd.square >= 0) {
        if (row_square(t, a) > bd.square || col_square(t, b) > bd.square) break;
      }
      fill_cell(s, a, b + 1);
    }
    t[z(a * m_ + b)] = 0;
    if (bd.symmetric) t[z(b * m_ + a)] = 0;
  }

  const BasedRing& r_;
  bool duality_;
  int m_, n_ = 0;
  std::vector<Step> plan_;
  std::map<int, Bounds> bounds_;
  std::vector<Flat> R_;
  std::map<Key, ZPlusModule> found_;
};

// Entries of position k against earlier positions, for every matrix in turn.
void append_shell(const ZPlusModule& m, const std::vector<int>& p, int k, Key& key) {
  for (const auto& a : m.action) {
    for (int y = 0; y <= k; ++y) key.push_back(a[z(p[z(k)])][z(p[z(y)])]);
    for (int x = 0; x < k; ++x) key.push_back(a[z(p[z(x)])][z(p[z(k)])]);
  }
}

void canon_search(const ZPlusModule& m, std::vector<int>& p, std::vector<bool>& used, Key& prefix, Key& best,
                  std::vector<int>& best_perm) {
  const int k = static_cast<int>(p.size());
  if (k == m.rank) {
    if (best.empty() || prefix < best) {
      best = prefix;
      best_perm = p;
    }
    return;
  }
  for (int v = 0; v < m.rank; ++v) {
    if (used[z(v)]) continue;
    p.push_back(v);
    const std::size_t before = prefix.size();
    append_shell(m, p, k, prefix);
    bool prune = false;
    if (!best.empty()) {
      const auto c = std::lexicographical_compare_three_way(prefix.begin(), prefix.end(), best.begin(),
                                                            best.begin() + static_cast<long>(prefix.size()));
      prune = c > 0;
    }
    if (!prune) {
      used[z(v)] = true;
      canon_search(m, p, used, prefix, best, best_perm);
      used[z(v)] = false;
    }
    prefix.resize(before);
    p.pop_back();
  }
}

}  // namespace

ZPlusModule permuted(const ZPlusModule& m, const std::vector<int>& perm) {
  ZPlusModule out;
  out.rank = m.rank;
  for (const auto& a : m.action) {
    IntMatrix b(z(m.rank), std::vector<std::int64_t>(z(m.rank)));
    for (int x = 0; x < m.rank; ++x)
      for (int y = 0; y < m.rank; ++y) b[z(x)][z(y)] = a[z(perm[z(x)])][z(perm[z(y)])];
    out.action.push_back(std::move(b));
  }
  return out;
}

ZPlusModule canonical_form(const ZPlusModule& m) {
  std::vector<int> p, best_perm;
  std::vector<bool> used(z(m.rank), false);
  Key prefix, best;
  canon_search(m, p, used, prefix, best, best_perm);
  if (best_perm.empty()) return m;
  return permuted(m, best_perm);
}

ZPlusModule regular_module(const BasedRing& r) {
  ZPlusModule m;
  m.rank = r.rank();
  for (int i = 0; i < r.rank(); ++i) m.action.push_back(mult_matrix(r, r.basis(i), Side::Left));
  return m;
}

Report verify_module(const BasedRing& r, const ZPlusModule& m, bool duality) {
  Report rep;
  const int n = r.rank(), k = m.rank;
  bool shape = k >= 1 && static_cast<int>(m.action.size()) == n;
  for (auto& a : m.action) {
    shape = shape && static_cast<int>(a.size()) == k;
    for (auto& row : a) shape = shape && static_cast<int>(row.size()) == k;
  }
  if (!shape) {
    rep.push_back({"error", "shape", "need one rank x rank matrix per basis element", {}});
    return rep;
  }
  std::vector<Flat> R;
  for (int i = 0; i < n; ++i) {
    Flat f;
    for (auto& row : m.action[z(i)]) f.insert(f.end(), row.begin(), row.end());
    if (std::any_of(f.begin(), f.end(), [](std::int64_t v) { return v < 0; }))
      rep.push_back({"error", "negative_entry", "negative entry in R_" + r.labels()[z(i)], {i}});
    R.push_back(std::move(f));
  }
  {
    Flat unit(z(k * k), 0);
    for (int u : r.unit())
      for (int t = 0; t < k * k; ++t) unit[z(t)] += R[z(u)][z(t)];
    Flat id(z(k * k), 0);
    for (int x = 0; x < k; ++x) id[z(x * k + x)] = 1;
    if (unit != id) rep.push_back({"error", "unit", "the unit does not act as the identity", {}});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Flat lhs = mul(R[z(i)], R[z(j)], k);
      for (int c = 0; c < n; ++c)
        for (int t = 0; t < k * k; ++t) lhs[z(t)] -= r.N(i, j, c) * R[z(c)][z(t)];
      if (std::any_of(lhs.begin(), lhs.end(), [](std::int64_t v) { return v != 0; }))
        rep.push_back({"error", "relation", "R_i R_j differs from sum N_ij^k R_k", {i, j}});
    }
  if (!support_connected(R, k)) rep.push_back({"error", "irreducible", "support graph is not strongly connected", {}});
  if (duality)
    for (int i = 0; i < n; ++i)
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
          if (R[z(r.star(i))][z(x * k + y)] != R[z(i)][z(y * k + x)]) {
            rep.push_back({"error", "duality", "R_{i*} is not the transpose of R_i", {i}});
            x = y = k;
          }
  sort_findings(rep);
  return rep;
}

FpDims ring_fpdims(const BasedRing& r) {
  TensorCatData d;
  d.ring = r;
  d.cartan.assign(z(r.rank()), std::vector<std::int64_t>(z(r.rank()), 0));
  for (int i = 0; i < r.rank(); ++i) d.cartan[z(i)][z(i)] = 1;
  return TensorCategory(std::move(d)).fpdims();
}

std::vector<ZPlusModule> enumerate(const BasedRing& r, int max_rank, const EnumerateOptions& opt) {
  if (max_rank < 1) fail(ErrorCode::BadParameter, "max rank must be at least 1");
  if (max_rank > opt.cap)
    fail(ErrorCode::RankTooLarge, "max rank " + std::to_string(max_rank) + " exceeds the cap " + std::to_string(opt.cap));
  if (!r.single_unit() || !is_transitive(r)) fail(ErrorCode::NotTransitive, "enumeration needs a transitive ring");
  const FpDims fp = ring_fpdims(r);
  auto solve = [&](int m) {
    Search s(r, fp, opt.duality, m);
    s.run();
    return std::move(s.found());
  };
  std::vector<std::future<std::map<Key, ZPlusModule>>> jobs;
  for (int m = 1; m <= max_rank; ++m)
    jobs.push_back(std::async(opt.parallel ? std::launch::async : std::launch::deferred, solve, m));
  std::vector<ZPlusModule> out;
  for (auto& j : jobs)
    for (auto& [key, mod] : j.get()) out.push_back(std::move(mod));
  return out;
}

std::vector<ZPlusModule> enumerate(const BasedRing& r, int max_rank, bool duality) {
  EnumerateOptions opt;
  opt.duality = duality;
  return enumerate(r, max_rank, opt);
}

bool census_match(const std::vector<ZPlusModule>& modules, std::vector<int> expected_ranks) {
  std::vector<int> got;
  for (auto& m : modules) got.push_back(m.rank);
  std::sort(got.begin(), got.end());
  std::sort(expected_ranks.begin(), expected_ranks.end());
  return got == expected_ranks;
}

std::optional<NFVector> module_fp_vector(const BasedRing& r, const ZPlusModule& m) {
  const FpDims fp = ring_fpdims(r);
  const int k = m.rank;
  IntMatrix s(z(k), std::vector<std::int64_t>(z(k), 0));
  NFElement total = NFElement::rational(fp.field, 0);
  for (int i = 0; i < r.rank(); ++i) {
    total += fp.d[z(i)];
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) s[z(x)][z(y)] += m.action[z(i)][z(x)][z(y)];
  }
  NFVector v;
  try {
    v = field_solve_eigvector(s, total, 0);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (auto& x : v)
    if (sign(x) <= 0) return std::nullopt;
  for (int i = 0; i < r.rank(); ++i)
    for (int x = 0; x < k; ++x) {
      NFElement lhs = NFElement::rational(fp.field, 0);
      for (int y = 0; y < k; ++y)
        if (m.action[z(i)][z(x)][z(y)] != 0)
          lhs += NFElement::rational(fp.field, Rational(static_cast<long>(m.action[z(i)][z(x)][z(y)]))) * v[z(y)];
      if (!(lhs == fp.d[z(i)] * v[z(x)])) return std::nullopt;
    }
  return v;
}

}  // namespace ftcat
