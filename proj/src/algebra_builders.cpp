#include "ftcat/algebra_builders.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "ftcat/error.hpp"

namespace ftcat {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

SVector unit_vector(const ExactField& f, int n, int i) {
  SVector v(z(n), f.zero());
  v[z(i)] = f.one();
  return v;
}

SMatrix from_columns(const ExactField& f, const std::vector<SVector>& cols, int n) {
  SMatrix m = zero_matrix(f, n, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < n; ++i) m[z(i)][j] = cols[j][z(i)];
  return m;
}

SMatrix inverse(const ExactField& f, const SMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<SVector> cols;
  for (int j = 0; j < n; ++j) {
    auto x = solve(f, m, unit_vector(f, n, j));
    if (!x || rank(f, m) != n) fail(ErrorCode::InvalidInput, "matrix is not invertible");
    cols.push_back(std::move(*x));
  }
  return from_columns(f, cols, n);
}

SMatrix conjugate(const ExactField& f, const SMatrix& change, const SMatrix& change_inv, const SMatrix& m) {
  return matmul(f, change_inv, matmul(f, m, change));
}

SMatrix kron(const ExactField& f, const SMatrix& a, const SMatrix& b) {
  const std::size_t ra = a.size(), rb = b.size();
  const std::size_t ca = ra ? a[0].size() : 0, cb = rb ? b[0].size() : 0;
  SMatrix out(ra * rb, SVector(ca * cb, f.zero()));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j) {
      if (f.is_zero(a[i][j])) continue;
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l)
          if (!f.is_zero(b[k][l])) out[i * rb + k][j * cb + l] = f.mul(a[i][j], b[k][l]);
    }
  return out;
}

Scalar& mult_at(EquivariantAlgebra& a, int i, int j, int k) {
  return a.mult[(z(i) * z(a.dim) + z(j)) * z(a.dim) + z(k)];
}

EquivariantAlgebra empty_algebra(const ExactField& f, int n) {
  EquivariantAlgebra a;
  a.field = f;
  a.dim = n;
  a.mult.assign(z(n) * z(n) * z(n), f.zero());
  a.unit.assign(z(n), f.zero());
  return a;
}

void check_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  std::set<int> s(h.begin(), h.end());
  if (s.size() != h.size() || !s.count(0)) fail(ErrorCode::NotASubgroup, "subgroup must list distinct elements including the identity");
  for (int a : h) {
    if (a < 0 || a >= g.order()) fail(ErrorCode::NotASubgroup, "subgroup element out of range");
    for (int b : h)
      if (!s.count(g.mul(a, b))) fail(ErrorCode::NotASubgroup, "subgroup is not closed under multiplication");
  }
}

// End(V) on the matrix units E_ij with H acting by conjugation through rep.
EquivariantAlgebra matrix_algebra(const ExactField& f, int n) {
  EquivariantAlgebra a = empty_algebra(f, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.basis.push_back("E" + std::to_string(i) + std::to_string(j));
      for (int l = 0; l < n; ++l) mult_at(a, i * n + j, j * n + l, i * n + l) = f.one();
    }
  for (int i = 0; i < n; ++i) a.unit[z(i * n + i)] = f.one();
  return a;
}

SMatrix adjoint_action(const ExactField& f, const SMatrix& rho) {
  const int n = static_cast<int>(rho.size());
  const SMatrix inv = inverse(f, rho);
  SMatrix m = zero_matrix(f, n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m[z(a * n + b)][z(i * n + j)] = f.mul(rho[z(a)][z(i)], inv[z(j)][z(b)]);
  return m;
}

struct Induced {
  EquivariantAlgebra alg;
  std::map<int, SMatrix> action;  // for every element of the ambient set
};

// Ind_H^K(C) for H <= K <= G: one block of C per left coset of H in K, with
// x in K moving block c to block c' through h = r_c'^-1 x r_c. Derivations of
// C are copied blockwise.
Induced induce(const FiniteGroup& g, const std::vector<int>& k, const std::vector<int>& h, const EquivariantAlgebra& c,
               const std::map<int, SMatrix>& inner_action) {
  const ExactField& f = c.field;
  std::set<int> hs(h.begin(), h.end());
  std::vector<int> reps;
  std::map<int, int> coset_of;
  for (int x : k) {
    if (coset_of.count(x)) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int y : h) coset_of[g.mul(x, y)] = idx;
  }
  const int nc = static_cast<int>(reps.size()), m = c.dim, n = nc * m;
  Induced out{empty_algebra(f, n), {}};
  EquivariantAlgebra& a = out.alg;
  for (int b = 0; b < nc; ++b)
    for (int i = 0; i < m; ++i) {
      a.basis.push_back(nc == 1 ? c.basis[z(i)] : "[" + g.labels[z(reps[z(b)])] + "]" + c.basis[z(i)]);
      a.unit[z(b * m + i)] = c.unit[z(i)];
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) mult_at(a, b * m + i, b * m + j, b * m + l) = c.c(i, j, l);
    }
  for (int x : k) {
    SMatrix mat = zero_matrix(f, n, n);
    for (int b = 0; b < nc; ++b) {
      const int moved = g.mul(x, reps[z(b)]);
      const int b2 = coset_of.at(moved);
      const int hh = g.mul(g.inverse[z(reps[z(b2)])], moved);
      if (!hs.count(hh)) fail(ErrorCode::NotASubgroup, "coset decomposition failed");
      const SMatrix& in = inner_action.at(hh);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mat[z(b2 * m + i)][z(b * m + j)] = in[z(i)][z(j)];
    }
    out.action[x] = std::move(mat);
  }
  for (const Derivation& d : c.derivations) {
    SMatrix mat = zero_matrix(f, n, n);
    for (int b = 0; b < nc; ++b)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mat[z(b * m + i)][z(b * m + j)] = d.matrix[z(i)][z(j)];
    a.derivations.push_back({d.name, std::move(mat), d.twist, d.nilpotence});
  }
  return out;
}

int sign_of(const GroupSpec& spec, const std::vector<int>& chi, int a) {
  if (chi.empty()) return 1;
  const auto d = AbelianGroup(spec.factors).digits(a);
  int s = 1;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (chi[i] < 0 && d[i] % 2) s = -s;
  return s;
}

// Orthogonal basis for a symmetric form (char != 2): rows of `basis` and the
// values q_i = B(b_i, b_i).
void diagonalize(const ExactField& f, const SMatrix& b, SMatrix& basis, std::vector<Scalar>& q) {
  const int n = static_cast<int>(b.size());
  auto form = [&](const SVector& x, const SVector& y) {
    Scalar s = f.zero();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!f.is_zero(x[z(i)]) && !f.is_zero(y[z(j)]))
          s = f.add(s, f.mul(f.mul(x[z(i)], b[z(i)][z(j)]), y[z(j)]));
    return s;
  };
  std::vector<SVector> rest;
  for (int i = 0; i < n; ++i) rest.push_back(unit_vector(f, n, i));
  basis.clear();
  q.clear();
  while (!rest.empty()) {
    int pick = -1;
    for (std::size_t i = 0; i < rest.size() && pick < 0; ++i)
      if (!f.is_zero(form(rest[i], rest[i]))) pick = static_cast<int>(i);
    if (pick < 0) {
      for (std::size_t i = 0; i < rest.size() && pick < 0; ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
          if (!f.is_zero(form(rest[i], rest[j]))) {
            for (std::size_t t = 0; t < rest[i].size(); ++t) rest[i][t] = f.add(rest[i][t], rest[j][t]);
            pick = static_cast<int>(i);
            break;
          }
    }
    if (pick < 0) {
      for (auto& v : rest) {
        basis.push_back(v);
        q.push_back(f.zero());
      }
      break;
    }
    SVector v = rest[z(pick)];
    rest.erase(rest.begin() + pick);
    const Scalar qv = form(v, v);
    const Scalar qinv = f.inv(qv);
    for (auto& w : rest) {
      const Scalar c = f.mul(form(w, v), qinv);
      for (std::size_t t = 0; t < w.size(); ++t) w[t] = f.sub(w[t], f.mul(c, v[t]));
    }
    basis.push_back(std::move(v));
    q.push_back(qv);
  }
}

// x_S x_T in the Clifford algebra of an orthogonal basis with squares q.
Scalar clifford_coeff(const ExactField& f, const std::vector<Scalar>& q, unsigned s, unsigned t) {
  int swaps = 0;
  for (unsigned i = 0; i < q.size(); ++i)
    if (s >> i & 1u)
      for (unsigned j = 0; j < i; ++j)
        if (t >> j & 1u) ++swaps;
  Scalar c = swaps % 2 ? f.neg(f.one()) : f.one();
  for (unsigned i = 0; i < q.size(); ++i)
    if ((s >> i & 1u) && (t >> i & 1u)) c = f.mul(c, q[i]);
  return c;
}

int popcount(unsigned s) { return __builtin_popcount(s); }

std::string mask_label(unsigned s, const char* name) {
  if (!s) return "1";
  std::string out;
  for (unsigned i = 0; s >> i; ++i)
    if (s >> i & 1u) out += name + std::to_string(i);
  return out;
}

void check_super_inputs(const ExactField& f, const SuperData& s) {
  if (f.characteristic() == 2) fail(ErrorCode::CharacteristicTwo, "super data needs characteristic other than 2");
  if (!s.group.abelian()) fail(ErrorCode::UnsupportedGroup, "super data needs an abelian group");
  const int k = static_cast<int>(s.y.size());
  if (static_cast<int>(s.b.size()) != k) fail(ErrorCode::LengthMismatch, "form size differs from dim Y");
  for (auto& row : s.y)
    if (static_cast<int>(row.size()) != s.w_dim) fail(ErrorCode::LengthMismatch, "Y basis vectors must lie in W");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(s.b[z(i)].size()) != k) fail(ErrorCode::NonSquare, "form must be square");
    for (int j = 0; j < k; ++j)
      if (s.b[z(i)][z(j)] != s.b[z(j)][z(i)]) fail(ErrorCode::AsymmetricForm, "form is not symmetric");
  }
  if (k > 0 && rank(f, s.y) != k) fail(ErrorCode::InvalidInput, "Y basis is dependent");
  if (!s.chi.empty() && s.chi.size() != s.group.factors.size())
    fail(ErrorCode::LengthMismatch, "chi needs one sign per group factor");
  const int n = s.group.order();
  if (s.u < 0 || s.u >= n) fail(ErrorCode::IndexOutOfRange, "u is not a group element");
  const AbelianGroup ag(s.group.factors);
  if (ag.element_order(s.u) > 2) fail(ErrorCode::BadParameter, "u must have order at most 2");
  if (s.w_dim > 0 && sign_of(s.group, s.chi, s.u) != -1) fail(ErrorCode::InvalidInput, "u must act by -1 on W");
}

std::vector<SMatrix> trivial_rep(const ExactField& f, std::size_t count) {
  return std::vector<SMatrix>(count, identity_matrix(f, 1));
}

CocycleTable trivial_cocycle(const ExactField& f, std::size_t count) {
  return CocycleTable(count, SVector(count, f.one()));
}

void check_projective_rep(const ExactField& f, const FiniteGroup& g, const std::vector<int>& h, const CocycleTable& psi,
                          const std::vector<SMatrix>& rep) {
  if (rep.size() != h.size()) fail(ErrorCode::LengthMismatch, "representation needs one matrix per subgroup element");
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < h.size(); ++i) pos[h[i]] = i;
  const std::size_t n = rep[0].size();
  for (auto& m : rep)
    if (m.size() != n || std::any_of(m.begin(), m.end(), [&](const SVector& r) { return r.size() != n; }))
      fail(ErrorCode::NonSquare, "representation matrices must be square of one size");
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b) {
      SMatrix rhs = rep[pos.at(g.mul(h[a], h[b]))];
      for (auto& row : rhs)
        for (auto& x : row) x = f.mul(x, psi[a][b]);
      if (matmul(f, rep[a], rep[b]) != rhs)
        fail(ErrorCode::InvalidInput, "representation is not projective for the given cocycle");
    }
}

}  // namespace

int FiniteGroup::element_order(int a) const {
  int o = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++o;
  return o;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::set<int> s{0};
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int x : gens) {
      const int y = mul(queue[i], x);
      if (s.insert(y).second) queue.push_back(y);
    }
  return {s.begin(), s.end()};
}

FiniteGroup FiniteGroup::from_spec(const GroupSpec& spec) {
  FiniteGroup g;
  if (spec.abelian()) {
    const AbelianGroup ag(spec.factors);
    const int n = ag.order();
    g.table.assign(z(n), std::vector<int>(z(n)));
    for (int a = 0; a < n; ++a) {
      g.inverse.push_back(ag.neg(a));
      g.labels.push_back(ag.label(a));
      for (int b = 0; b < n; ++b) g.table[z(a)][z(b)] = ag.add(a, b);
    }
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      std::vector<int> d(spec.factors.size(), 0);
      d[i] = 1;
      g.generators.push_back(ag.from_digits(d));
    }
    return g;
  }
  if (spec.named != "S3") fail(ErrorCode::UnsupportedGroup, "no stored table for " + spec.named);
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  g.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    std::string label;
    for (int v : perms[z(a)]) label += std::to_string(v + 1);
    g.labels.push_back(label);
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[z(i)] = perms[z(a)][z(perms[z(b)][z(i)])];
      g.table[z(a)][z(b)] = index(c);
    }
  }
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (g.table[z(a)][z(b)] == 0) g.inverse.push_back(b);
  g.generators = {index({1, 0, 2}), index({1, 2, 0})};
  return g;
}

void check_cocycle(const ExactField& f, const FiniteGroup& g, const std::vector<int>& h, const CocycleTable& psi) {
  const std::size_t n = h.size();
  if (psi.size() != n || std::any_of(psi.begin(), psi.end(), [&](const SVector& r) { return r.size() != n; }))
    fail(ErrorCode::CocycleInvalid, "cocycle table must be |H| x |H|");
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[h[i]] = i;
  const std::size_t e = pos.at(0);
  for (std::size_t a = 0; a < n; ++a) {
    if (!f.is_one(psi[e][a]) || !f.is_one(psi[a][e])) fail(ErrorCode::CocycleInvalid, "cocycle is not normalized");
    for (std::size_t b = 0; b < n; ++b) {
      if (f.is_zero(psi[a][b])) fail(ErrorCode::CocycleInvalid, "cocycle takes the value 0");
      const std::size_t ab = pos.at(g.mul(h[a], h[b]));
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t bc = pos.at(g.mul(h[b], h[c]));
        if (f.mul(psi[a][b], psi[ab][c]) != f.mul(psi[a][bc], psi[b][c]))
          fail(ErrorCode::CocycleInvalid, "cocycle identity fails on (" + std::to_string(h[a]) + "," +
                                              std::to_string(h[b]) + "," + std::to_string(h[c]) + ")");
      }
    }
  }
}

CocycleTable standard_cocycle_2x2(const ExactField& f) {
  CocycleTable psi(4, SVector(4, f.one()));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if ((a >> 1 & 1) && (b & 1)) psi[z(a)][z(b)] = f.neg(f.one());
  return psi;
}

std::vector<SMatrix> pauli_representation(const ExactField& f) {
  const Scalar o = f.one(), zr = f.zero(), m = f.neg(f.one());
  const SMatrix x{{zr, o}, {o, zr}}, zz{{o, zr}, {zr, m}};
  return {identity_matrix(f, 2), x, zz, matmul(f, x, zz)};
}

EquivariantAlgebra build_group_quotient(const ExactField& f, const GroupSpec& spec, const std::vector<int>& h,
                                        const CocycleTable& psi_in, const std::vector<SMatrix>& rep_in) {
  const FiniteGroup g = FiniteGroup::from_spec(spec);
  check_subgroup(g, h);
  if (!psi_in.empty() && rep_in.empty()) fail(ErrorCode::InvalidInput, "a twisted quotient needs a projective representation");
  const CocycleTable psi = psi_in.empty() ? trivial_cocycle(f, h.size()) : psi_in;
  const std::vector<SMatrix> rep = rep_in.empty() ? trivial_rep(f, h.size()) : rep_in;
  check_cocycle(f, g, h, psi);
  check_projective_rep(f, g, h, psi, rep);
  const EquivariantAlgebra inner = matrix_algebra(f, static_cast<int>(rep[0].size()));
  std::map<int, SMatrix> act;
  for (std::size_t i = 0; i < h.size(); ++i) act[h[i]] = adjoint_action(f, rep[i]);
  std::vector<int> all(z(g.order()));
  for (int i = 0; i < g.order(); ++i) all[z(i)] = i;
  Induced ind = induce(g, all, h, inner, act);
  EquivariantAlgebra a = std::move(ind.alg);
  for (int x : g.generators) a.actions.push_back({g.labels[z(x)], ind.action.at(x), g.element_order(x)});
  return a;
}

EquivariantAlgebra build_clifford_smash(const ExactField& f, const SuperData& s) {
  check_super_inputs(f, s);
  const FiniteGroup g = FiniteGroup::from_spec(s.group);
  const int nh = g.order();
  const CocycleTable psi = s.psi.empty() ? trivial_cocycle(f, z(nh)) : s.psi;
  std::vector<int> all(z(nh));
  for (int i = 0; i < nh; ++i) all[z(i)] = i;
  check_cocycle(f, g, all, psi);
  const int k = static_cast<int>(s.y.size());
  SMatrix ortho;  // rows in Y coordinates
  std::vector<Scalar> q;
  diagonalize(f, s.b, ortho, q);
  const unsigned nm = 1u << k;
  const int n = nh * static_cast<int>(nm);
  EquivariantAlgebra a = empty_algebra(f, n);
  auto idx = [&](int h, unsigned m) { return h * static_cast<int>(nm) + static_cast<int>(m); };
  for (int h = 0; h < nh; ++h)
    for (unsigned m = 0; m < nm; ++m)
      a.basis.push_back((h ? "t" + g.labels[z(h)] : std::string()) + (m || !h ? mask_label(m, "x") : ""));
  for (int ha = 0; ha < nh; ++ha)
    for (unsigned sa = 0; sa < nm; ++sa)
      for (int hb = 0; hb < nh; ++hb)
        for (unsigned sb = 0; sb < nm; ++sb) {
          Scalar c = f.mul(psi[z(ha)][z(hb)], clifford_coeff(f, q, sa, sb));
          if (popcount(sa) % 2 && sign_of(s.group, s.chi, hb) < 0) c = f.neg(c);
          mult_at(a, idx(ha, sa), idx(hb, sb), idx(g.mul(ha, hb), sa ^ sb)) = c;
        }
  a.unit[z(idx(0, 0))] = f.one();
  auto parity_of = [&](int i) { return popcount(static_cast<unsigned>(i) % nm) % 2; };
  auto sign_action = [&](int sign) {
    SMatrix m = identity_matrix(f, n);
    for (int i = 0; i < n; ++i)
      if (sign < 0 && parity_of(i)) m[z(i)][z(i)] = f.neg(f.one());
    return m;
  };
  a.actions.push_back({"parity", sign_action(-1), k > 0 ? 2 : 1});
  for (int x : g.generators)
    a.actions.push_back({g.labels[z(x)], sign_action(sign_of(s.group, s.chi, x)), g.element_order(x)});
  a.parity = 0;
  // derivations along an adapted basis of W: Y first, then standard complement vectors
  SMatrix ortho_inv = k ? inverse(f, ortho) : SMatrix{};
  for (int j = 0; j < k; ++j) {
    // y_j in the orthogonal generators x_i
    SVector yv(z(n), f.zero());
    for (int i = 0; i < k; ++i) yv[z(idx(0, 1u << i))] = ortho_inv[z(j)][z(i)];
    std::vector<SVector> cols;
    for (int b = 0; b < n; ++b) {
      const SVector e = a.basis_vector(b);
      SVector left = a.multiply(yv, e), right = a.multiply(e, yv);
      for (int t = 0; t < n; ++t) left[z(t)] = parity_of(b) ? f.add(left[z(t)], right[z(t)]) : f.sub(left[z(t)], right[z(t)]);
      cols.push_back(std::move(left));
    }
    a.derivations.push_back({"d_y" + std::to_string(j), from_columns(f, cols, n), 0, 2});
  }
  for (int j = k; j < s.w_dim; ++j) a.derivations.push_back({"d_w" + std::to_string(j - k), zero_matrix(f, n, n), 0, 2});
  const int nd = static_cast<int>(a.derivations.size());
  std::vector<int> signs{-1};
  for (int x : g.generators) signs.push_back(sign_of(s.group, s.chi, x));
  for (int sg : signs) {
    SMatrix c = zero_matrix(f, nd, nd);
    for (int v = 0; v < nd; ++v) c[z(v)][z(v)] = sg < 0 ? f.neg(f.one()) : f.one();
    a.compat.push_back(std::move(c));
  }
  a.anticommuting = true;
  a.filtration_bound = s.w_dim;
  return a;
}

EquivariantAlgebra supergroup_internal_hom(const ExactField& f, const SuperData& s, int max_dim) {
  check_super_inputs(f, s);
  const FiniteGroup g = FiniteGroup::from_spec(s.group);
  check_subgroup(g, s.h);
  const CocycleTable psi = s.psi.empty() ? trivial_cocycle(f, s.h.size()) : s.psi;
  const std::vector<SMatrix> rep = s.rep.empty() ? trivial_rep(f, s.h.size()) : s.rep;
  check_cocycle(f, g, s.h, psi);
  check_projective_rep(f, g, s.h, psi, rep);
  const int k = static_cast<int>(s.y.size()), w = s.w_dim;

  // U = annihilator of Ker B in W^*, with the form induced by B.
  std::vector<SVector> ker_w;
  for (auto& kv : nullspace(f, s.b, k)) {
    SVector v(z(w), f.zero());
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < w; ++t) v[z(t)] = f.add(v[z(t)], f.mul(kv[z(j)], s.y[z(j)][z(t)]));
    ker_w.push_back(std::move(v));
  }
  std::vector<SVector> u_basis;
  if (ker_w.empty())
    for (int t = 0; t < w; ++t) u_basis.push_back(unit_vector(f, w, t));
  else
    u_basis = nullspace(f, SMatrix(ker_w.begin(), ker_w.end()), w);
  const int r = static_cast<int>(u_basis.size());
  auto restrict_y = [&](const SVector& fn) {
    SVector out(z(k), f.zero());
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < w; ++t) out[z(j)] = f.add(out[z(j)], f.mul(fn[z(t)], s.y[z(j)][z(t)]));
    return out;
  };
  SMatrix gram = zero_matrix(f, r, r);
  for (int i = 0; i < r; ++i) {
    const auto a = solve(f, s.b, restrict_y(u_basis[z(i)]));
    if (!a) fail(ErrorCode::InconsistentData, "functional does not vanish on Ker B");
    for (int j = 0; j < r; ++j) {
      const SVector fj = restrict_y(u_basis[z(j)]);
      Scalar sum = f.zero();
      for (int t = 0; t < k; ++t) sum = f.add(sum, f.mul((*a)[z(t)], fj[z(t)]));
      gram[z(i)][z(j)] = sum;
    }
  }
  SMatrix ortho;
  std::vector<Scalar> q;
  diagonalize(f, gram, ortho, q);
  // orthogonal generators o_i as functionals on W
  std::vector<SVector> o(z(r), SVector(z(w), f.zero()));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int t = 0; t < w; ++t) o[z(i)][z(t)] = f.add(o[z(i)][z(t)], f.mul(ortho[z(i)][z(j)], u_basis[z(j)][z(t)]));

  std::vector<int> hh = s.h;
  hh.push_back(s.u);
  const std::vector<int> hat = g.generated(hh);
  const int nv = static_cast<int>(rep[0].size());
  const long expected = static_cast<long>(g.order() / static_cast<int>(s.h.size())) * nv * nv * (1L << r);
  if (expected > max_dim) fail(ErrorCode::DimensionOverflow, "internal Hom has dimension " + std::to_string(expected));

  // E = Ind_H^{H^}(End V), rebased onto the parity eigenbasis
  std::map<int, SMatrix> act;
  for (std::size_t i = 0; i < s.h.size(); ++i) act[s.h[i]] = adjoint_action(f, rep[i]);
  Induced e = induce(g, hat, s.h, matrix_algebra(f, nv), act);
  const int ne = e.alg.dim;
  std::vector<int> epar;
  SMatrix change;
  {
    const SMatrix& p = e.action.at(s.u);
    SMatrix pm = p, pp = p;
    for (int i = 0; i < ne; ++i) {
      pm[z(i)][z(i)] = f.sub(pm[z(i)][z(i)], f.one());
      pp[z(i)][z(i)] = f.add(pp[z(i)][z(i)], f.one());
    }
    std::vector<SVector> cols = nullspace(f, pm, ne);
    epar.assign(cols.size(), 0);
    for (auto& v : nullspace(f, pp, ne)) {
      cols.push_back(v);
      epar.push_back(1);
    }
    if (static_cast<int>(cols.size()) != ne) fail(ErrorCode::InvalidInput, "u does not act as an involution");
    change = from_columns(f, cols, ne);
  }
  const SMatrix change_inv = inverse(f, change);
  const EquivariantAlgebra eh = rebase(e.alg, change);
  std::map<int, SMatrix> eact;
  for (int x : hat) eact[x] = conjugate(f, change, change_inv, e.action.at(x));

  // T = E (x) Cl(U) in the super sense, with H^ acting diagonally
  const unsigned nm = 1u << r;
  const int nt = ne * static_cast<int>(nm);
  EquivariantAlgebra t = empty_algebra(f, nt);
  auto ti = [&](int a, unsigned m) { return a * static_cast<int>(nm) + static_cast<int>(m); };
  for (int a = 0; a < ne; ++a)
    for (unsigned m = 0; m < nm; ++m)
      t.basis.push_back((m ? mask_label(m, "f") : std::string()) + (ne > 1 || !m ? eh.basis[z(a)] : ""));
  for (int a = 0; a < ne; ++a)
    for (unsigned sa = 0; sa < nm; ++sa)
      for (int b = 0; b < ne; ++b)
        for (unsigned sb = 0; sb < nm; ++sb) {
          Scalar cc = clifford_coeff(f, q, sa, sb);
          if (popcount(sa) % 2 && epar[z(b)]) cc = f.neg(cc);
          for (int m = 0; m < ne; ++m)
            if (!f.is_zero(eh.c(a, b, m))) mult_at(t, ti(a, sa), ti(b, sb), ti(m, sa ^ sb)) = f.mul(eh.c(a, b, m), cc);
        }
  for (int a = 0; a < ne; ++a) t.unit[z(ti(a, 0))] = eh.unit[z(a)];
  std::map<int, SMatrix> tact;
  for (int x : hat) {
    SMatrix cl = identity_matrix(f, static_cast<int>(nm));
    if (sign_of(s.group, s.chi, x) < 0)
      for (unsigned m = 0; m < nm; ++m)
        if (popcount(m) % 2) cl[m][m] = f.neg(f.one());
    tact[x] = kron(f, eact.at(x), cl);
  }
  for (int v = 0; v < w; ++v) {
    SMatrix d = zero_matrix(f, nt, nt);
    for (int a = 0; a < ne; ++a)
      for (unsigned m = 0; m < nm; ++m) {
        int pos = 0;
        for (int i = 0; i < r; ++i) {
          if (!(m >> i & 1u)) continue;
          Scalar c = o[z(i)][z(v)];
          if (pos % 2) c = f.neg(c);
          if (epar[z(a)]) c = f.neg(c);
          d[z(ti(a, m & ~(1u << i)))][z(ti(a, m))] = c;
          ++pos;
        }
      }
    t.derivations.push_back({"d" + std::to_string(v), std::move(d), 0, 2});
  }

  std::vector<int> all(z(g.order()));
  for (int i = 0; i < g.order(); ++i) all[z(i)] = i;
  Induced ind = induce(g, all, hat, t, tact);
  EquivariantAlgebra a = std::move(ind.alg);
  a.actions.push_back({"u", ind.action.at(s.u), std::max(1, g.element_order(s.u))});
  for (int x : g.generators) a.actions.push_back({g.labels[z(x)], ind.action.at(x), g.element_order(x)});
  a.parity = 0;
  for (auto& d : a.derivations) d.twist = 0;
  const int nd = static_cast<int>(a.derivations.size());
  std::vector<int> signs{sign_of(s.group, s.chi, s.u)};
  for (int x : g.generators) signs.push_back(sign_of(s.group, s.chi, x));
  for (int sg : signs) {
    SMatrix c = zero_matrix(f, nd, nd);
    for (int v = 0; v < nd; ++v) c[z(v)][z(v)] = sg < 0 ? f.neg(f.one()) : f.one();
    a.compat.push_back(std::move(c));
  }
  a.anticommuting = true;
  a.filtration_bound = w;
  return a;
}

EquivariantAlgebra build_taft_A(int l, int d, const Scalar& lambda, const ExactField& f) {
  if (l < 2 || d < 1 || l % d != 0) fail(ErrorCode::BadDivisor, "d must divide l");
  if (f.root_order() % l != 0 && !(l == 2 && f.characteristic() != 2))
    fail(ErrorCode::BadParameter, "field lacks a primitive l-th root of unity");
  const int m = l / d;
  const Scalar zeta = f.root_order() == l ? f.zeta() : f.pow(f.zeta(), f.root_order() / l);
  const Scalar zinv = f.inv(l == 2 ? f.neg(f.one()) : zeta);
  const Scalar zm = f.pow(l == 2 ? f.neg(f.one()) : zeta, d);
  Presentation p;
  p.field = f;
  const bool has_c = m > 1;
  const int c = 0, y = has_c ? 1 : 0;
  if (has_c) p.generators.push_back("c");
  p.generators.push_back("y");
  if (has_c) {
    p.rules.push_back({std::vector<int>(z(m), c), {Term{f.one(), {}}}});
    p.rules.push_back({{y, c}, {Term{f.inv(zm), {c, y}}}});
  }
  p.rules.push_back({std::vector<int>(z(l), y), f.is_zero(lambda) ? std::vector<Term>{} : std::vector<Term>{Term{lambda, {}}}});
  ActionSpec g{"g", {}, l};
  DerivationSpec dd{"d", {}, 0, l};
  if (has_c) {
    g.images.push_back({Term{zm, {c}}});
    dd.images.push_back({});
  }
  g.images.push_back({Term{zinv, {y}}});
  dd.images.push_back({Term{f.one(), {}}});
  p.actions.push_back(std::move(g));
  p.derivations.push_back(std::move(dd));
  p.compat = {SMatrix{{zinv}}};
  p.filtration_bound = l - 1;
  p.dimension_bound = std::max(64, l * m + 1);
  return build_from_presentation(p);
}

EquivariantAlgebra build_taft_A(int l, int d, long lambda) {
  if (l < 2 || d < 1 || l % d != 0) fail(ErrorCode::BadDivisor, "d must divide l");
  const ExactField f = ExactField::cyclotomic(l);
  return build_taft_A(l, d, f.from_rational(Rational(lambda)), f);
}

Report verify_taft_derivative_powers(const EquivariantAlgebra& a, int l) {
  Report rep;
  const ExactField& f = a.field;
  if (a.derivations.empty()) {
    rep.push_back({"error", "derivative_power", "algebra has no derivation", {}});
    return rep;
  }
  const Scalar zinv = f.inv(l == 2 ? f.neg(f.one()) : f.zeta());
  const SVector y = a.basis_vector(a.index_of("y"));
  SVector prev = a.unit;  // y^(m-1)
  Scalar coeff = f.zero();
  Scalar zp = f.one();
  for (int m = 1; m < l; ++m) {
    const SVector ym = a.multiply(prev, y);
    coeff = f.add(coeff, zp);
    zp = f.mul(zp, zinv);
    SVector rhs = prev;
    for (auto& x : rhs) x = f.mul(x, coeff);
    if (matvec(f, a.derivations[0].matrix, ym) != rhs)
      rep.push_back({"error", "derivative_power", "d(y^" + std::to_string(m) + ") has the wrong coefficient", {m}});
    prev = ym;
  }
  return rep;
}

EquivariantAlgebra taft_hopf_algebra(int l) {
  if (l < 2) fail(ErrorCode::BadParameter, "Taft algebra needs l >= 2");
  const ExactField f = ExactField::cyclotomic(l);
  const Scalar zeta = l == 2 ? f.neg(f.one()) : f.zeta();
  Presentation p;
  p.field = f;
  p.generators = {"g", "x"};
  p.rules.push_back({std::vector<int>(z(l), 0), {Term{f.one(), {}}}});
  p.rules.push_back({std::vector<int>(z(l), 1), {}});
  p.rules.push_back({{1, 0}, {Term{f.inv(zeta), {0, 1}}}});
  p.dimension_bound = l * l + 1;
  return build_from_presentation(p);
}

TaftProjectives taft_projectives(int l) {
  const EquivariantAlgebra h = taft_hopf_algebra(l);
  const ExactField& f = h.field;
  const Scalar zeta = l == 2 ? f.neg(f.one()) : f.zeta();
  const int n = h.dim;
  const SVector gv = h.basis_vector(h.index_of("g")), xv = h.basis_vector(h.index_of("x"));
  const SMatrix lg = h.left_mult(gv), lx = h.left_mult(xv);
  TaftProjectives out;
  out.dim = n;
  const Scalar inv_l = f.from_rational(Rational(1, l));
  for (int i = 0; i < l; ++i) {
    SVector e(z(n), f.zero());
    SVector gk = h.unit;
    for (int k = 0; k < l; ++k) {
      const Scalar c = f.mul(inv_l, f.pow(zeta, -static_cast<long>(i) * k));
      for (int t = 0; t < n; ++t) e[z(t)] = f.add(e[z(t)], f.mul(c, gk[z(t)]));
      gk = h.multiply(gk, gv);
    }
    Echelon span(f, n);
    for (int b = 0; b < n; ++b) span.insert(h.multiply(h.basis_vector(b), e));
    const std::vector<SVector> basis = span.inserted();
    const int k = static_cast<int>(basis.size());
    out.projective_dims.push_back(k);
    const SMatrix bm = from_columns(f, basis, n);
    const SMatrix xb = matmul(f, lx, bm);
    std::vector<int> row;
    int socle = -1;
    for (int j = 0; j < l; ++j) {
      SMatrix shifted = lg;
      for (int t = 0; t < n; ++t) shifted[z(t)][z(t)] = f.sub(shifted[z(t)][z(t)], f.pow(zeta, j));
      const SMatrix gb = matmul(f, shifted, bm);
      row.push_back(static_cast<int>(nullspace(f, gb, k).size()));
      SMatrix both = gb;
      both.insert(both.end(), xb.begin(), xb.end());
      if (socle < 0 && !nullspace(f, both, k).empty()) socle = j;
    }
    out.cartan.push_back(std::move(row));
    out.socle.push_back(socle);
  }
  return out;
}

}  // namespace ftcat
