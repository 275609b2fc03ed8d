#include "ftcat/tensorcat.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "ftcat/error.hpp"

namespace ftcat {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string perm_string(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

bool is_semisimple(const TensorCatData& c) {
  const int n = c.ring.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c.cartan[z(i)][z(j)] != (i == j ? 1 : 0)) return false;
  return true;
}

Report validate_category(const TensorCatData& c) {
  Report rep = validate_ring(c.ring);
  const int n = c.ring.rank();
  auto add = [&](const char* code, std::string msg, std::vector<int> w) {
    rep.push_back({"error", code, std::move(msg), std::move(w)});
  };
  if (c.characteristic != 0 && !is_prime(c.characteristic))
    add("characteristic", "characteristic must be 0 or a prime", {c.characteristic});
  if (static_cast<int>(c.cartan.size()) != n) {
    add("cartan_shape", "Cartan matrix has wrong size", {});
    sort_findings(rep);
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c.cartan[z(i)].size()) != n) {
      add("cartan_shape", "Cartan row has wrong length", {i});
      sort_findings(rep);
      return rep;
    }
    for (int j = 0; j < n; ++j)
      if (c.cartan[z(i)][z(j)] < 0) add("negative_entry", "negative Cartan entry", {i, j});
    if (c.cartan[z(i)][z(i)] < 1) add("cartan_top", "top L_i missing from P_i", {i});
  }
  if (c.socle) {
    const auto& s = *c.socle;
    std::vector<int> seen(z(n), 0);
    bool ok = static_cast<int>(s.size()) == n;
    for (int x : s) {
      if (x < 0 || x >= n) ok = false;
      else seen[z(x)]++;
    }
    ok = ok && std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
    if (!ok) {
      add("socle_permutation", "socle map is not a permutation", {});
    } else {
      for (int i = 0; i < n; ++i)
        if (c.cartan[z(i)][z(s[z(i)])] < 1) add("socle_in_cartan", "socle of P_i is not a composition factor", {i});
      if (is_semisimple(c))
        for (int i = 0; i < n; ++i)
          if (s[z(i)] != i) add("socle_semisimple", "semisimple data needs the identity socle", {i});
    }
  }
  if (!has_code(rep, "star_bijection")) {
    for (int i = 0; i < n; ++i) {
      bool found = false;
      for (int k = 0; k < n && !found; ++k) {
        bool match = true;
        for (int j = 0; j < n && match; ++j) match = c.cartan[z(k)][z(c.ring.star(j))] == c.cartan[z(i)][z(j)];
        found = match;
      }
      if (!found) add("dual_projective", "dual of P_i is not realized by a Cartan row", {i});
    }
  }
  sort_findings(rep);
  return rep;
}

struct TensorCategory::State {
  TensorCatData data;
  std::once_flag once;
  FpDims dims;
};

TensorCategory::TensorCategory(TensorCatData data) : s_(std::make_shared<State>()) {
  const int n = data.ring.rank();
  if (static_cast<int>(data.cartan.size()) != n) fail(ErrorCode::LengthMismatch, "Cartan matrix size differs from ring rank");
  for (auto& row : data.cartan)
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::NonSquare, "Cartan matrix is not square");
  s_->data = std::move(data);
}

const TensorCatData& TensorCategory::data() const { return s_->data; }

const FpDims& TensorCategory::fpdims() const {
  std::call_once(s_->once, [this] {
    const BasedRing& r = ring();
    if (!r.single_unit() || !is_transitive(r)) fail(ErrorCode::NotTransitive, "ring is not transitive");
    const IntMatrix t = total_matrix(r);
    const RealAlgebraic lambda = perron_root(t);
    FpDims out;
    out.generator = lambda;
    out.field = make_field(lambda);
    IntMatrix tt(t.size(), std::vector<std::int64_t>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) tt[i][j] = t[j][i];
    out.d = field_solve_eigvector(tt, NFElement::generator(out.field), r.unit_index());
    const int n = r.rank();
    for (int i = 0; i < n; ++i) {
      if (sign(out.d[z(i)]) <= 0) fail(ErrorCode::InconsistentData, "FP dimension not positive at " + r.labels()[z(i)]);
      // d is a common eigenvector: sum_k N(i,j,k) d_k = d_i d_j
      for (int j = 0; j < n; ++j) {
        NFElement acc = NFElement::rational(out.field, 0);
        for (int k = 0; k < n; ++k)
          if (r.N(i, j, k)) acc += NFElement::rational(out.field, Rational(static_cast<long>(r.N(i, j, k)))) * out.d[z(k)];
        if (!(acc == out.d[z(i)] * out.d[z(j)]))
          fail(ErrorCode::InconsistentData, "FP dimensions are not a ring character");
      }
    }
    s_->dims = std::move(out);
  });
  return s_->dims;
}

NFElement fpdim_object(const TensorCategory& c, const GrVector& x) {
  const FpDims& f = c.fpdims();
  if (static_cast<int>(x.size()) != c.rank()) fail(ErrorCode::LengthMismatch, "vector length differs from ring rank");
  NFElement acc = NFElement::rational(f.field, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) acc += NFElement::rational(f.field, Rational(static_cast<long>(x[i]))) * f.d[i];
  return acc;
}

GrVector projective_class(const TensorCatData& c, int i) {
  if (i < 0 || i >= c.ring.rank()) fail(ErrorCode::IndexOutOfRange, "projective index " + std::to_string(i));
  return c.cartan[z(i)];
}

NFElement fpdim_projective(const TensorCategory& c, int i) { return fpdim_object(c, projective_class(c.data(), i)); }

NFElement fpdim_kvector(const TensorCategory& c, const KVector& v) {
  if (static_cast<int>(v.size()) != c.rank()) fail(ErrorCode::LengthMismatch, "vector length differs from ring rank");
  GrVector g(v.size(), 0);
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) g[z(j)] += v[z(i)] * c.cartan()[z(i)][z(j)];
  return fpdim_object(c, g);
}

NFElement fpdim_category(const TensorCategory& c) {
  const FpDims& f = c.fpdims();
  NFElement acc = NFElement::rational(f.field, 0);
  for (int i = 0; i < c.rank(); ++i) acc += f.d[z(i)] * fpdim_projective(c, i);
  return acc;
}

KVector proj_tensor(const TensorCatData& c, int i, const GrVector& zv, Side side) {
  const BasedRing& r = c.ring;
  const int n = r.rank();
  if (i < 0 || i >= n) fail(ErrorCode::IndexOutOfRange, "projective index " + std::to_string(i));
  if (static_cast<int>(zv.size()) != n) fail(ErrorCode::LengthMismatch, "vector length differs from ring rank");
  KVector out(z(n), 0);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      if (!zv[z(j)]) continue;
      const std::int64_t coef = side == Side::Right ? r.N(k, r.star(j), i) : r.N(r.star_inv(j), k, i);
      out[z(k)] += coef * zv[z(j)];
    }
  return out;
}

KVector proj_fusion_left(const TensorCatData& c, int i, int j) {
  const int n = c.ring.rank();
  if (i < 0 || i >= n || j < 0 || j >= n) fail(ErrorCode::IndexOutOfRange, "projective index out of range");
  return proj_tensor(c, j, c.cartan[z(i)], Side::Left);
}

KVector proj_fusion(const TensorCatData& c, int i, int j) {
  const int n = c.ring.rank();
  if (i < 0 || i >= n || j < 0 || j >= n) fail(ErrorCode::IndexOutOfRange, "projective index out of range");
  KVector right = proj_tensor(c, i, c.cartan[z(j)], Side::Right);
  if (right != proj_fusion_left(c, i, j))
    fail(ErrorCode::InconsistentData, "left and right projective fusion disagree for (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
  return right;
}

NFVector regular_object(const TensorCategory& c) {
  const FpDims& f = c.fpdims();
  const int n = c.rank();
  for (int x = 0; x < n; ++x) {
    for (Side side : {Side::Right, Side::Left}) {
      NFVector acc(z(n), NFElement::rational(f.field, 0));
      for (int i = 0; i < n; ++i) {
        const KVector v = proj_tensor(c.data(), i, c.ring().basis(x), side);
        for (int k = 0; k < n; ++k)
          if (v[z(k)]) acc[z(k)] += NFElement::rational(f.field, Rational(static_cast<long>(v[z(k)]))) * f.d[z(i)];
      }
      for (int k = 0; k < n; ++k)
        if (!(acc[z(k)] == f.d[z(x)] * f.d[z(k)]))
          fail(ErrorCode::InconsistentData, "regular object is not an eigenvector for " + c.ring().labels()[z(x)]);
    }
  }
  return f.d;
}

Report check_distinguished(const TensorCategory& c, const Distinguished& d) {
  Report rep;
  const BasedRing& r = c.ring();
  const IntMatrix& C = c.cartan();
  const int n = r.rank();
  auto add = [&](const char* code, std::string msg, std::vector<int> w) {
    rep.push_back({"error", code, std::move(msg), std::move(w)});
  };
  {
    std::vector<int> sorted = d.D;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(z(n));
    std::iota(iota.begin(), iota.end(), 0);
    if (sorted != iota || d.rho < 0 || d.rho >= n) {
      add("not_permutation", "D is not a permutation", {});
      return rep;
    }
  }
  if (d.D[z(r.unit_index())] != d.rho) add("rho", "rho differs from D(unit)", {d.rho});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.N(d.rho, r.star(j), i) != (d.D[z(i)] == j ? 1 : 0)) add("delta_condition", "N(rho, j*, i) is not delta(D(i), j)", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (C[z(d.D[z(i)])][z(r.star(j))] != C[z(i)][z(j)]) add("cartan_rows", "C[D(i)][j*] differs from C[i][j]", {i, j});
  const GrVector e = r.unit_vector();
  const GrVector lr = r.basis(d.rho), lrs = r.basis(r.star(d.rho));
  if (gr_mul(r, lr, lrs) != e || gr_mul(r, lrs, lr) != e) add("not_invertible", "L_rho is not invertible", {d.rho});
  if (is_transitive(r) && r.single_unit()) {
    const FpDims& f = c.fpdims();
    if (!(f.d[z(d.rho)] == NFElement::rational(f.field, 1))) add("not_invertible", "d(L_rho) differs from 1", {d.rho});
  }
  if (!rep.empty()) {
    sort_findings(rep);
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (proj_tensor(c.data(), r.star_inv(i), lr, Side::Right) != r.basis(d.D[z(i)]))
      add("dual_projective", "P_D(i) differs from P_*i L_rho", {i});
    if (d.D[z(d.D[z(i)])] != r.star(r.star(i))) add("D_squared", "D(D(i)) differs from i**", {i});
    const int ss = r.star_inv(r.star_inv(i));
    const KVector v = proj_tensor(c.data(), ss, lr, Side::Right);
    KVector w(z(n), 0);
    for (int k = 0; k < n; ++k) {
      if (!v[z(k)]) continue;
      const KVector u = proj_tensor(c.data(), k, lrs, Side::Left);
      for (int m = 0; m < n; ++m) w[z(m)] += v[z(k)] * u[z(m)];
    }
    if (w != r.basis(r.star(r.star(i)))) add("double_dual", "P_i** differs from L_rho* P_**i L_rho", {i});
    if (gr_mul(r, gr_mul(r, lrs, r.basis(ss)), lr) != r.basis(r.star(r.star(i))))
      add("double_dual", "L_i** differs from L_rho* L_**i L_rho", {i});
  }
  sort_findings(rep);
  return rep;
}

std::vector<Distinguished> distinguished_candidates(const TensorCategory& c) {
  const BasedRing& r = c.ring();
  const int n = r.rank();
  if (c.data().socle) {
    Distinguished d;
    d.D.resize(z(n));
    for (int i = 0; i < n; ++i) d.D[z(i)] = r.star((*c.data().socle)[z(i)]);
    d.rho = d.D[z(r.unit_index())];
    const Report rep = check_distinguished(c, d);
    if (!rep.empty()) fail(ErrorCode::InconsistentData, "socle data fails " + rep.front().code + ": " + rep.front().message);
    return {d};
  }
  std::vector<Distinguished> out;
  for (int rho : invertibles(r)) {
    Distinguished d;
    d.rho = rho;
    d.D.assign(z(n), -1);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      int target = -1;
      for (int i = 0; i < n; ++i)
        if (r.N(rho, r.star(j), i) != 0) target = (target == -1 ? i : -2);
      if (target < 0 || d.D[z(target)] != -1) ok = false;
      else d.D[z(target)] = j;
    }
    if (ok && check_distinguished(c, d).empty()) out.push_back(d);
  }
  return out;
}

Distinguished distinguished(const TensorCategory& c) {
  const auto cands = distinguished_candidates(c);
  if (cands.empty()) fail(ErrorCode::InconsistentData, "no consistent distinguished invertible object");
  if (cands.size() > 1) {
    std::string msg = "candidates:";
    for (auto& d : cands) msg += " (rho=" + c.ring().labels()[z(d.rho)] + ", D=[" + perm_string(d.D) + "])";
    fail(ErrorCode::Ambiguous, msg);
  }
  return cands.front();
}

bool is_unimodular(const TensorCategory& c) { return distinguished(c).rho == c.ring().unit_index(); }

int matrix_rank(const IntMatrix& m, int p) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  int rank = 0;
  if (p == 0) {
    QMatrix a = to_rational(m);
    for (std::size_t c = 0; c < cols && z(rank) < rows; ++c) {
      std::size_t q = z(rank);
      while (q < rows && a[q][c] == 0) ++q;
      if (q == rows) continue;
      std::swap(a[q], a[z(rank)]);
      for (std::size_t i = z(rank) + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        const Rational f = a[i][c] / a[z(rank)][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[z(rank)][j];
      }
      ++rank;
    }
    return rank;
  }
  const std::int64_t P = p;
  IntMatrix a = m;
  for (auto& row : a)
    for (auto& x : row) x = ((x % P) + P) % P;
  auto inv = [P](std::int64_t x) {
    std::int64_t r = 1, e = P - 2;
    while (e) {
      if (e & 1) r = r * x % P;
      x = x * x % P;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && z(rank) < rows; ++c) {
    std::size_t q = z(rank);
    while (q < rows && a[q][c] == 0) ++q;
    if (q == rows) continue;
    std::swap(a[q], a[z(rank)]);
    const std::int64_t iv = inv(a[z(rank)][c]);
    for (std::size_t i = z(rank) + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::int64_t f = a[i][c] * iv % P;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[z(rank)][j]) % P + P) % P;
    }
    ++rank;
  }
  return rank;
}

CartanRank cartan_rank(const TensorCatData& c) {
  CartanRank out;
  out.size = c.ring.rank();
  out.rank_q = matrix_rank(c.cartan, 0);
  if (c.characteristic > 0) out.rank_p = matrix_rank(c.cartan, c.characteristic);
  if (c.pivotal_trace_exists.value_or(false) && !is_semisimple(c) && out.ground_rank() == out.size) {
    out.findings.push_back({"error", "lorentz_violation",
                            "nonsemisimple data with a pivotal trace must have a degenerate Cartan matrix", {}});
  }
  return out;
}

bool integrality_flag(const TensorCategory& c) {
  for (const auto& d : c.fpdims().d) {
    if (!d.is_rational()) return false;
    if (d.rational_value().get_den() != 1) return false;
  }
  return true;
}

DimensionInequality dimension_inequality(const TensorCategory& c) {
  DimensionInequality out;
  const FpDims& f = c.fpdims();
  out.slack = fpdim_category(c) - NFElement::rational(f.field, c.rank()) * fpdim_projective(c, c.ring().unit_index());
  out.sign = sign(out.slack);
  if (out.sign < 0)
    out.findings.push_back({"error", "dimension_inequality", "d+(C) is smaller than N d+(P_unit)", {}});
  return out;
}

TensorCatData deligne_product(const TensorCatData& a, const TensorCatData& b) {
  if (a.characteristic != b.characteristic)
    fail(ErrorCode::CharacteristicMismatch,
         "characteristics " + std::to_string(a.characteristic) + " and " + std::to_string(b.characteristic));
  const int na = a.ring.rank(), nb = b.ring.rank(), n = na * nb;
  auto id = [nb](int i, int j) { return i * nb + j; };
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) labels.push_back("(" + a.ring.labels()[z(i)] + "," + b.ring.labels()[z(j)] + ")");
  std::vector<int> unit;
  for (int u : a.ring.unit())
    for (int v : b.ring.unit()) unit.push_back(id(u, v));
  std::vector<int> star(z(n));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) star[z(id(i, j))] = id(a.ring.star(i), b.ring.star(j));
  std::vector<std::int64_t> fusion(z(n) * z(n) * z(n), 0);
  BasedRing ring(std::move(labels), std::move(unit), std::move(fusion), std::move(star));
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < na; ++j1)
      for (int k1 = 0; k1 < na; ++k1) {
        const std::int64_t x = a.ring.N(i1, j1, k1);
        if (!x) continue;
        for (int i2 = 0; i2 < nb; ++i2)
          for (int j2 = 0; j2 < nb; ++j2)
            for (int k2 = 0; k2 < nb; ++k2) ring.N(id(i1, i2), id(j1, j2), id(k1, k2)) = x * b.ring.N(i2, j2, k2);
      }
  TensorCatData out;
  out.ring = std::move(ring);
  out.characteristic = a.characteristic;
  out.cartan.assign(z(n), std::vector<std::int64_t>(z(n), 0));
  for (int i1 = 0; i1 < na; ++i1)
    for (int i2 = 0; i2 < nb; ++i2)
      for (int j1 = 0; j1 < na; ++j1)
        for (int j2 = 0; j2 < nb; ++j2)
          out.cartan[z(id(i1, i2))][z(id(j1, j2))] = a.cartan[z(i1)][z(j1)] * b.cartan[z(i2)][z(j2)];
  if (a.socle && b.socle) {
    std::vector<int> s(z(n));
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) s[z(id(i, j))] = id((*a.socle)[z(i)], (*b.socle)[z(j)]);
    out.socle = std::move(s);
  }
  if (a.pivotal_trace_exists && b.pivotal_trace_exists)
    out.pivotal_trace_exists = *a.pivotal_trace_exists && *b.pivotal_trace_exists;
  return out;
}

bool deligne_multiplicative(const TensorCategory& a, const TensorCategory& b, const TensorCategory& ab) {
  const RealAlgebraic prod = real_mul(to_real(fpdim_category(a)), to_real(fpdim_category(b)));
  return equal(prod, to_real(fpdim_category(ab)));
}

}  // namespace ftcat
