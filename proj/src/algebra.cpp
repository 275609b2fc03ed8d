#include "ftcat/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "ftcat/error.hpp"

namespace ftcat {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

using Word = std::vector<int>;
using LinComb = std::map<Word, Scalar>;

SMatrix sub(const ExactField& f, SMatrix a, const SMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = f.sub(a[i][j], b[i][j]);
  return a;
}

SMatrix scale(const ExactField& f, SMatrix a, const Scalar& s) {
  for (auto& row : a)
    for (auto& x : row) x = f.mul(x, s);
  return a;
}

bool is_zero_matrix(const ExactField& f, const SMatrix& m) {
  return std::all_of(m.begin(), m.end(), [&](const SVector& r) { return is_zero_vector(f, r); });
}

SVector column(const SMatrix& m, int j) {
  SVector v;
  for (auto& row : m) v.push_back(row[z(j)]);
  return v;
}

SMatrix from_columns(const ExactField& f, const std::vector<SVector>& cols, int n) {
  SMatrix m = zero_matrix(f, n, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < n; ++i) m[z(i)][j] = cols[j][z(i)];
  return m;
}

SVector add(const ExactField& f, SVector a, const SVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

SVector scaled(const ExactField& f, SVector a, const Scalar& s) {
  for (auto& x : a) x = f.mul(x, s);
  return a;
}

// Operator algebra generated by `ops` and the identity, over GF(p).
int closure_dim_mod_p(const ModPImage& img, int n, const std::vector<SMatrix>& ops, bool& mapped) {
  const std::uint64_t p = img.p();
  using M = std::vector<std::uint64_t>;
  std::vector<M> gens;
  mapped = true;
  for (auto& op : ops) {
    M g(z(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto v = img.map(op[z(i)][z(j)]);
        if (!v) {
          mapped = false;
          return 0;
        }
        g[z(i * n + j)] = *v;
      }
    gens.push_back(std::move(g));
  }
  EchelonModP ech(p, n * n);
  M id(z(n * n), 0);
  for (int i = 0; i < n; ++i) id[z(i * n + i)] = 1;
  std::deque<M> queue;
  ech.insert(id);
  queue.push_back(id);
  while (!queue.empty() && ech.size() < n * n) {
    M cur = std::move(queue.front());
    queue.pop_front();
    for (auto& g : gens) {
      M prod(z(n * n), 0);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          const std::uint64_t a = g[z(i * n + k)];
          if (!a) continue;
          for (int j = 0; j < n; ++j) {
            const std::uint64_t b = cur[z(k * n + j)];
            if (b) prod[z(i * n + j)] = (prod[z(i * n + j)] + a * b) % p;
          }
        }
      if (ech.insert(prod)) queue.push_back(std::move(prod));
      if (ech.size() == n * n) break;
    }
  }
  return ech.size();
}

int closure_dim_exact(const ExactField& f, int n, const std::vector<SMatrix>& ops) {
  auto flat = [&](const SMatrix& m) {
    SVector v;
    for (auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
  };
  Echelon ech(f, n * n);
  std::deque<SMatrix> queue;
  const SMatrix id = identity_matrix(f, n);
  ech.insert(flat(id));
  queue.push_back(id);
  while (!queue.empty() && ech.size() < n * n) {
    SMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (auto& g : ops) {
      SMatrix prod = matmul(f, g, cur);
      if (ech.insert(flat(prod))) queue.push_back(std::move(prod));
    }
  }
  return ech.size();
}

// Smallest subspace containing v and stable under every operator.
std::vector<SVector> spin(const ExactField& f, int n, const std::vector<SMatrix>& ops, const SVector& v) {
  Echelon ech(f, n);
  std::deque<SVector> queue;
  if (ech.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    SVector cur = std::move(queue.front());
    queue.pop_front();
    for (auto& g : ops) {
      SVector w = matvec(f, g, cur);
      if (ech.insert(w)) queue.push_back(std::move(w));
    }
  }
  return ech.inserted();
}

std::vector<SVector> annihilator(const ExactField& f, const std::vector<SVector>& basis, int n) {
  if (basis.empty()) {
    std::vector<SVector> out;
    for (int i = 0; i < n; ++i) {
      SVector e(z(n), f.zero());
      e[z(i)] = f.one();
      out.push_back(std::move(e));
    }
    return out;
  }
  return nullspace(f, SMatrix(basis.begin(), basis.end()), n);
}

Scalar dot(const ExactField& f, const SVector& a, const SVector& b) {
  Scalar s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.is_zero(a[i]) && !f.is_zero(b[i])) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

bool in_span(const ExactField& f, const std::vector<SVector>& basis, const SVector& v, int n) {
  Echelon e(f, n);
  for (auto& b : basis) e.insert(b);
  return e.contains(v);
}

}  // namespace

SVector EquivariantAlgebra::multiply(const SVector& a, const SVector& b) const {
  SVector out(z(dim), field.zero());
  for (int i = 0; i < dim; ++i) {
    if (field.is_zero(a[z(i)])) continue;
    for (int j = 0; j < dim; ++j) {
      if (field.is_zero(b[z(j)])) continue;
      const Scalar s = field.mul(a[z(i)], b[z(j)]);
      for (int k = 0; k < dim; ++k) {
        const Scalar& ck = c(i, j, k);
        if (!field.is_zero(ck)) out[z(k)] = field.add(out[z(k)], field.mul(s, ck));
      }
    }
  }
  return out;
}

SVector EquivariantAlgebra::basis_vector(int i) const {
  SVector v(z(dim), field.zero());
  v[z(i)] = field.one();
  return v;
}

int EquivariantAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim; ++i)
    if (basis[z(i)] == label) return i;
  fail(ErrorCode::IndexOutOfRange, "no basis element '" + label + "'");
}

SMatrix EquivariantAlgebra::right_mult(const SVector& b) const {
  SMatrix m = zero_matrix(field, dim, dim);
  for (int j = 0; j < dim; ++j) {
    const SVector col = multiply(basis_vector(j), b);
    for (int k = 0; k < dim; ++k) m[z(k)][z(j)] = col[z(k)];
  }
  return m;
}

SMatrix EquivariantAlgebra::left_mult(const SVector& a) const {
  SMatrix m = zero_matrix(field, dim, dim);
  for (int j = 0; j < dim; ++j) {
    const SVector col = multiply(a, basis_vector(j));
    for (int k = 0; k < dim; ++k) m[z(k)][z(j)] = col[z(k)];
  }
  return m;
}

Report validate_algebra(const EquivariantAlgebra& a) {
  Report rep;
  const ExactField& f = a.field;
  const int n = a.dim;
  auto square = [&](const SMatrix& m) {
    if (static_cast<int>(m.size()) != n) return false;
    return std::all_of(m.begin(), m.end(), [&](const SVector& r) { return static_cast<int>(r.size()) == n; });
  };
  bool shape = n >= 1 && a.mult.size() == z(n) * z(n) * z(n) && static_cast<int>(a.unit.size()) == n &&
               static_cast<int>(a.basis.size()) == n;
  for (auto& g : a.actions) shape = shape && square(g.matrix);
  for (auto& d : a.derivations)
    shape = shape && square(d.matrix) && d.twist < static_cast<int>(a.actions.size());
  if (!shape) {
    rep.push_back({"error", "shape", "structure data has inconsistent dimensions", {}});
    return rep;
  }
  auto err = [&](const char* code, std::string msg, std::vector<int> w) {
    rep.push_back({"error", code, std::move(msg), std::move(w)});
  };
  std::vector<SVector> e;
  for (int i = 0; i < n; ++i) e.push_back(a.basis_vector(i));
  // products of basis vectors, reused below
  std::vector<SVector> prod(z(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SVector v(z(n));
      for (int k = 0; k < n; ++k) v[z(k)] = a.c(i, j, k);
      prod[z(i * n + j)] = std::move(v);
    }
  for (int j = 0; j < n; ++j)
    if (a.multiply(a.unit, e[z(j)]) != e[z(j)] || a.multiply(e[z(j)], a.unit) != e[z(j)])
      err("unit", "unit law fails", {j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SVector left(z(n), f.zero()), right(z(n), f.zero());
        for (int m = 0; m < n; ++m) {
          if (!f.is_zero(a.c(i, j, m))) left = add(f, left, scaled(f, prod[z(m * n + k)], a.c(i, j, m)));
          if (!f.is_zero(a.c(j, k, m))) right = add(f, right, scaled(f, prod[z(i * n + m)], a.c(j, k, m)));
        }
        if (left != right) err("associativity", "(e_i e_j) e_k differs from e_i (e_j e_k)", {i, j, k});
      }
  auto op_images = [&](const SMatrix& m) {
    std::vector<SVector> out;
    for (int j = 0; j < n; ++j) out.push_back(column(m, j));
    return out;
  };
  for (std::size_t g = 0; g < a.actions.size(); ++g) {
    const auto& act = a.actions[g];
    const auto img = op_images(act.matrix);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (matvec(f, act.matrix, prod[z(i * n + j)]) != a.multiply(img[z(i)], img[z(j)]))
          err("automorphism", act.name + " is not multiplicative", {static_cast<int>(g), i, j});
    SMatrix pw = identity_matrix(f, n);
    for (int t = 0; t < act.order; ++t) pw = matmul(f, act.matrix, pw);
    if (pw != identity_matrix(f, n)) err("order", act.name + " does not have the declared order", {static_cast<int>(g)});
  }
  for (std::size_t v = 0; v < a.derivations.size(); ++v) {
    const auto& d = a.derivations[v];
    const auto dimg = op_images(d.matrix);
    const std::vector<SVector> twist = d.twist >= 0 ? op_images(a.actions[z(d.twist)].matrix) : e;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const SVector lhs = matvec(f, d.matrix, prod[z(i * n + j)]);
        const SVector rhs = add(f, a.multiply(dimg[z(i)], e[z(j)]), a.multiply(twist[z(i)], dimg[z(j)]));
        if (lhs != rhs) err("skew_leibniz", d.name + "(ab) differs from " + d.name + "(a)b + t(a)" + d.name + "(b)", {static_cast<int>(v), i, j});
      }
    if (d.nilpotence) {
      SMatrix pw = identity_matrix(f, n);
      for (int t = 0; t < *d.nilpotence; ++t) pw = matmul(f, d.matrix, pw);
      if (!is_zero_matrix(f, pw)) err("nilpotence", d.name + " is not nilpotent of the declared order", {static_cast<int>(v)});
    }
  }
  for (std::size_t g = 0; g < a.compat.size() && g < a.actions.size(); ++g) {
    const SMatrix& C = a.compat[g];
    const SMatrix& G = a.actions[g].matrix;
    for (std::size_t v = 0; v < a.derivations.size(); ++v) {
      SMatrix rhs = zero_matrix(f, n, n);
      for (std::size_t w = 0; w < a.derivations.size(); ++w) {
        if (f.is_zero(C[v][w])) continue;
        const SMatrix term = scale(f, matmul(f, G, a.derivations[w].matrix), C[v][w]);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) rhs[z(i)][z(j)] = f.add(rhs[z(i)][z(j)], term[z(i)][z(j)]);
      }
      if (matmul(f, a.derivations[v].matrix, G) != rhs)
        err("compatibility", "derivation " + a.derivations[v].name + " does not commute with " + a.actions[g].name + " as declared",
            {static_cast<int>(g), static_cast<int>(v)});
    }
  }
  if (a.anticommuting)
    for (std::size_t v = 0; v < a.derivations.size(); ++v)
      for (std::size_t w = v; w < a.derivations.size(); ++w) {
        const SMatrix s1 = matmul(f, a.derivations[v].matrix, a.derivations[w].matrix);
        const SMatrix s2 = matmul(f, a.derivations[w].matrix, a.derivations[v].matrix);
        SMatrix sum = s1;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) sum[z(i)][z(j)] = f.add(s1[z(i)][z(j)], s2[z(i)][z(j)]);
        if (!is_zero_matrix(f, sum)) err("anticommutation", "derivations do not anticommute", {static_cast<int>(v), static_cast<int>(w)});
      }
  sort_findings(rep);
  return rep;
}

std::vector<int> parse_word(const std::vector<std::string>& generators, const std::string& text) {
  std::vector<int> order(generators.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return generators[z(a)].size() > generators[z(b)].size(); });
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '*') {
      ++pos;
      continue;
    }
    int hit = -1;
    for (int g : order)
      if (!generators[z(g)].empty() && text.compare(pos, generators[z(g)].size(), generators[z(g)]) == 0) {
        hit = g;
        break;
      }
    if (hit < 0) fail(ErrorCode::InvalidInput, "cannot split word '" + text + "' into generators");
    w.push_back(hit);
    pos += generators[z(hit)].size();
  }
  return w;
}

namespace {

class Rewriter {
 public:
  Rewriter(const Presentation& p) : p_(p) {
    for (auto& r : p.rules)
      if (r.lhs.empty()) fail(ErrorCode::InvalidInput, "relation with an empty left side");
  }

  LinComb reduce(LinComb in) {
    const ExactField& f = p_.field;
    LinComb out;
    std::vector<std::pair<Word, Scalar>> work(in.begin(), in.end());
    while (!work.empty()) {
      auto [w, c] = std::move(work.back());
      work.pop_back();
      if (f.is_zero(c)) continue;
      if (++steps_ > 4000000) fail(ErrorCode::DimensionOverflow, "rewriting does not terminate within the step limit");
      bool rewrote = false;
      for (std::size_t pos = 0; pos < w.size() && !rewrote; ++pos)
        for (const Rule& r : p_.rules) {
          if (pos + r.lhs.size() > w.size() || !std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<long>(pos)))
            continue;
          for (const Term& t : r.rhs) {
            Word nw(w.begin(), w.begin() + static_cast<long>(pos));
            nw.insert(nw.end(), t.word.begin(), t.word.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
            work.emplace_back(std::move(nw), f.mul(c, t.coeff));
          }
          rewrote = true;
          break;
        }
      if (rewrote) continue;
      auto it = out.find(w);
      if (it == out.end()) out.emplace(std::move(w), std::move(c));
      else {
        it->second = f.add(it->second, c);
        if (f.is_zero(it->second)) out.erase(it);
      }
    }
    return out;
  }

 private:
  const Presentation& p_;
  long steps_ = 0;
};

std::string word_label(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    s += p.generators[z(w[i])];
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace

EquivariantAlgebra build_from_presentation(const Presentation& p) {
  const ExactField& f = p.field;
  Rewriter rw(p);
  std::vector<Word> words{Word{}};
  std::map<Word, int> index{{Word{}, 0}};
  auto note = [&](const LinComb& lc) {
    for (auto& [w, c] : lc)
      if (!index.count(w)) {
        if (static_cast<int>(words.size()) >= p.dimension_bound)
          fail(ErrorCode::DimensionOverflow, "spanning set exceeds the bound " + std::to_string(p.dimension_bound));
        index[w] = static_cast<int>(words.size());
        words.push_back(w);
      }
  };
  const int ngen = static_cast<int>(p.generators.size());
  for (std::size_t q = 0; q < words.size(); ++q)
    for (int x = 0; x < ngen; ++x) {
      Word w = words[q];
      w.push_back(x);
      note(rw.reduce({{w, f.one()}}));
    }
  // products of spanning words; new words extend the closure
  std::vector<LinComb> products;
  for (bool grown = true; grown;) {
    grown = false;
    products.clear();
    const std::size_t n0 = words.size();
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j) {
        Word w = words[i];
        w.insert(w.end(), words[j].begin(), words[j].end());
        LinComb lc = rw.reduce({{w, f.one()}});
        note(lc);
        products.push_back(std::move(lc));
      }
    if (words.size() != n0) grown = true;
  }
  EquivariantAlgebra a;
  a.field = f;
  a.dim = static_cast<int>(words.size());
  const int n = a.dim;
  for (auto& w : words) a.basis.push_back(word_label(p, w));
  a.mult.assign(z(n) * z(n) * z(n), f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [w, c] : products[z(i * n + j)]) a.mult[(z(i) * z(n) + z(j)) * z(n) + z(index.at(w))] = c;
  a.unit = a.basis_vector(0);

  auto vec_of = [&](const std::vector<Term>& terms) {
    LinComb lc;
    for (auto& t : terms) {
      LinComb r = rw.reduce({{t.word, t.coeff}});
      for (auto& [w, c] : r) {
        auto it = lc.find(w);
        lc[w] = it == lc.end() ? c : f.add(it->second, c);
      }
    }
    SVector v(z(n), f.zero());
    for (auto& [w, c] : lc) {
      if (!index.count(w)) fail(ErrorCode::InconsistentRelations, "image leaves the spanning set");
      v[z(index.at(w))] = f.add(v[z(index.at(w))], c);
    }
    return v;
  };
  std::vector<SVector> gen_vec;
  for (int x = 0; x < ngen; ++x) gen_vec.push_back(vec_of({Term{f.one(), Word{x}}}));
  auto eval_word = [&](const Word& w, const std::vector<SVector>& images) {
    SVector v = a.unit;
    for (int x : w) v = a.multiply(v, images[z(x)]);
    return v;
  };
  // Relations must hold for the generator vectors; otherwise the rewriting
  // was not confluent and the normal words are dependent.
  {
    const Report r = validate_algebra(a);
    if (has_code(r, "associativity") || has_code(r, "unit"))
      fail(ErrorCode::InconsistentRelations, "relations are not confluent: the spanned product is not associative");
    for (const Rule& rule : p.rules) {
      SVector rhs(z(n), f.zero());
      for (const Term& t : rule.rhs) rhs = add(f, rhs, scaled(f, eval_word(t.word, gen_vec), t.coeff));
      if (eval_word(rule.lhs, gen_vec) != rhs)
        fail(ErrorCode::InconsistentRelations, "relation " + word_label(p, rule.lhs) + " fails on the spanning set");
    }
  }
  for (const ActionSpec& as : p.actions) {
    if (static_cast<int>(as.images.size()) != ngen) fail(ErrorCode::LengthMismatch, "action needs one image per generator");
    std::vector<SVector> img;
    for (auto& t : as.images) img.push_back(vec_of(t));
    std::vector<SVector> cols;
    for (auto& w : words) cols.push_back(eval_word(w, img));
    a.actions.push_back({as.name, from_columns(f, cols, n), as.order});
  }
  for (const DerivationSpec& ds : p.derivations) {
    if (static_cast<int>(ds.images.size()) != ngen) fail(ErrorCode::LengthMismatch, "derivation needs one image per generator");
    if (ds.twist >= static_cast<int>(p.actions.size())) fail(ErrorCode::IndexOutOfRange, "twist refers to a missing action");
    std::vector<SVector> img;
    for (auto& t : ds.images) img.push_back(vec_of(t));
    std::vector<SVector> twist_img;
    for (int x = 0; x < ngen; ++x)
      twist_img.push_back(ds.twist >= 0 ? matvec(f, a.actions[z(ds.twist)].matrix, gen_vec[z(x)]) : gen_vec[z(x)]);
    std::vector<SVector> cols;
    for (auto& w : words) {
      SVector total(z(n), f.zero());
      SVector prefix = a.unit;
      for (std::size_t t = 0; t < w.size(); ++t) {
        SVector term = a.multiply(prefix, img[z(w[t])]);
        term = a.multiply(term, eval_word(Word(w.begin() + static_cast<long>(t) + 1, w.end()), gen_vec));
        total = add(f, total, term);
        prefix = a.multiply(prefix, twist_img[z(w[t])]);
      }
      cols.push_back(std::move(total));
    }
    a.derivations.push_back({ds.name, from_columns(f, cols, n), ds.twist, ds.nilpotence});
  }
  a.compat = p.compat;
  a.anticommuting = p.anticommuting;
  a.parity = p.parity;
  a.filtration_bound = p.filtration_bound;
  return a;
}

SimpleResult burnside_closure(const ExactField& f, int n, const std::vector<SMatrix>& ops) {
  SimpleResult out;
  const int target = n * n;
  int dim = -1;
  for (int seed = 0; seed < 8 && dim < 0; ++seed) {
    ModPImage img(f, seed);
    bool mapped = false;
    const int d = closure_dim_mod_p(img, n, ops, mapped);
    if (mapped) dim = d;
  }
  if (dim == target) {
    out.simple = true;
    out.closure_dim = target;
    out.message = "operators generate all " + std::to_string(n) + "x" + std::to_string(n) + " matrices";
    return out;
  }
  for (int j = 0; j < n; ++j) {
    SVector e(z(n), f.zero());
    e[z(j)] = f.one();
    auto s = spin(f, n, ops, e);
    if (static_cast<int>(s.size()) < n) {
      out.simple = false;
      out.closure_dim = dim >= 0 ? dim : closure_dim_exact(f, n, ops);
      out.witness = std::move(s);
      out.message = "invariant subspace of dimension " + std::to_string(out.witness->size());
      return out;
    }
  }
  out.closure_dim = closure_dim_exact(f, n, ops);
  out.simple = out.closure_dim == target;
  out.message = out.simple ? "operators generate all matrices" : "reducible over closure, no rational witness found";
  return out;
}

SimpleResult is_simple_from_right(const EquivariantAlgebra& a) {
  std::vector<SMatrix> ops;
  for (int j = 0; j < a.dim; ++j) ops.push_back(a.right_mult(a.basis_vector(j)));
  for (auto& g : a.actions) ops.push_back(g.matrix);
  for (auto& d : a.derivations) ops.push_back(d.matrix);
  return burnside_closure(a.field, a.dim, ops);
}

EquivariantAlgebra subalgebra(const EquivariantAlgebra& a, const std::vector<SVector>& span) {
  const ExactField& f = a.field;
  const int n = a.dim, k = static_cast<int>(span.size());
  const SMatrix B = from_columns(f, span, n);
  auto coords = [&](const SVector& v) {
    auto x = solve(f, B, v);
    if (!x) fail(ErrorCode::InvalidInput, "span is not closed");
    return *x;
  };
  EquivariantAlgebra s;
  s.field = f;
  s.dim = k;
  for (int i = 0; i < k; ++i) s.basis.push_back("b" + std::to_string(i));
  s.mult.assign(z(k) * z(k) * z(k), f.zero());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const SVector c = coords(a.multiply(span[z(i)], span[z(j)]));
      for (int m = 0; m < k; ++m) s.mult[(z(i) * z(k) + z(j)) * z(k) + z(m)] = c[z(m)];
    }
  s.unit = coords(a.unit);
  for (auto& g : a.actions) {
    std::vector<SVector> cols;
    for (auto& b : span) cols.push_back(coords(matvec(f, g.matrix, b)));
    s.actions.push_back({g.name, from_columns(f, cols, k), g.order});
  }
  s.parity = a.parity;
  return s;
}

Filtration compute_filtration(const EquivariantAlgebra& a) {
  const ExactField& f = a.field;
  const int n = a.dim;
  Filtration out;
  auto err = [&](const char* code, std::string msg, std::vector<int> w) {
    out.findings.push_back({"error", code, std::move(msg), std::move(w)});
  };
  std::vector<SVector> prev;  // A_{i-1}
  for (int i = 0; i <= n; ++i) {
    std::vector<SVector> level;
    if (a.derivations.empty()) {
      for (int j = 0; j < n; ++j) level.push_back(a.basis_vector(j));
    } else {
      const auto ann = annihilator(f, prev, n);
      SMatrix rows;
      for (auto& fn : ann)
        for (auto& d : a.derivations) {
          SVector r(z(n), f.zero());
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
              if (!f.is_zero(fn[z(k)]) && !f.is_zero(d.matrix[z(k)][z(j)]))
                r[z(j)] = f.add(r[z(j)], f.mul(fn[z(k)], d.matrix[z(k)][z(j)]));
          rows.push_back(std::move(r));
        }
      level = nullspace(f, rows, n);
    }
    const bool stable = static_cast<int>(level.size()) == static_cast<int>(prev.size());
    if (stable) break;
    out.levels.push_back(level);
    out.dims.push_back(static_cast<int>(level.size()));
    prev = std::move(level);
    if (static_cast<int>(prev.size()) == n) break;
  }
  const int top = static_cast<int>(out.levels.size()) - 1;
  auto level_at = [&](int i) -> const std::vector<SVector>& { return out.levels[z(std::min(i, top))]; };
  // (a) d(A_i) in A_{i-1}
  for (int i = 0; i <= top; ++i)
    for (std::size_t v = 0; v < a.derivations.size(); ++v)
      for (auto& x : out.levels[z(i)]) {
        const SVector dx = matvec(f, a.derivations[v].matrix, x);
        const bool ok = i == 0 ? is_zero_vector(f, dx) : in_span(f, out.levels[z(i - 1)], dx, n);
        if (!ok) {
          err("filtration_a", "a derivation does not lower the filtration degree", {i, static_cast<int>(v)});
          break;
        }
      }
  // (b) group invariance
  for (int i = 0; i <= top; ++i)
    for (std::size_t g = 0; g < a.actions.size(); ++g)
      for (auto& x : out.levels[z(i)])
        if (!in_span(f, out.levels[z(i)], matvec(f, a.actions[g].matrix, x), n)) {
          err("filtration_b", "filtration level is not group invariant", {i, static_cast<int>(g)});
          break;
        }
  // (c) multiplicativity
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      Echelon target(f, n);
      for (auto& b : level_at(i + j)) target.insert(b);
      bool ok = true;
      for (auto& x : out.levels[z(i)])
        for (auto& y : out.levels[z(j)])
          if (ok && !target.contains(a.multiply(x, y))) ok = false;
      if (!ok) err("filtration_c", "A_i A_j is not contained in A_{i+j}", {i, j});
    }
  // (d) exhaustion, at the declared bound when there is one
  if (top < 0 || static_cast<int>(out.levels[z(top)].size()) != n)
    err("filtration_d", "filtration does not exhaust the algebra", {});
  else if (a.filtration_bound && top > *a.filtration_bound)
    err("filtration_d", "filtration exhausts only at degree " + std::to_string(top), {top});
  // (e) a in A_i \ A_{i-1} has some d_v(a) outside A_{i-2}
  for (int i = 1; i <= top; ++i) {
    const auto ann = annihilator(f, i >= 2 ? out.levels[z(i - 2)] : std::vector<SVector>{}, n);
    SMatrix rows;
    for (auto& fn : ann)
      for (auto& d : a.derivations) {
        SVector r;
        for (auto& x : out.levels[z(i)]) r.push_back(dot(f, fn, matvec(f, d.matrix, x)));
        rows.push_back(std::move(r));
      }
    const int rk = rows.empty() ? 0 : rank(f, rows);
    if (rk != static_cast<int>(out.levels[z(i)].size() - out.levels[z(i - 1)].size()))
      err("filtration_e", "strict drop fails between degrees", {i});
  }
  // (f) A_0 has no nontrivial invariant right ideals when A is simple from the right
  if (top >= 0 && is_simple_from_right(a).simple) {
    const EquivariantAlgebra a0 = subalgebra(a, out.levels[0]);
    std::vector<SMatrix> ops;
    for (int j = 0; j < a0.dim; ++j) ops.push_back(a0.right_mult(a0.basis_vector(j)));
    for (auto& g : a0.actions) ops.push_back(g.matrix);
    out.a0_simple = burnside_closure(f, a0.dim, ops).simple;
    if (!*out.a0_simple) err("filtration_f", "A_0 has a nontrivial invariant right ideal", {});
  }
  sort_findings(out.findings);
  return out;
}

bool semisimplicity_test(const EquivariantAlgebra& a) {
  const ExactField& f = a.field;
  const int p = f.characteristic();
  if (p > 0 && p <= a.dim)
    fail(ErrorCode::CharacteristicTooSmall, "trace form test needs characteristic above the dimension");
  const int n = a.dim;
  SVector tr(z(n), f.zero());
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m) tr[z(k)] = f.add(tr[z(k)], a.c(k, m, m));
  SMatrix t = zero_matrix(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!f.is_zero(a.c(i, j, k))) t[z(i)][z(j)] = f.add(t[z(i)][z(j)], f.mul(a.c(i, j, k), tr[z(k)]));
  return rank(f, t) == n;
}

Fingerprint fingerprint(const EquivariantAlgebra& a) {
  const ExactField& f = a.field;
  const int n = a.dim;
  Fingerprint fp;
  fp.dim = n;
  {
    SMatrix rows;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SVector r(z(n));
        for (int i = 0; i < n; ++i) r[z(i)] = f.sub(a.c(i, j, k), a.c(j, i, k));
        rows.push_back(std::move(r));
      }
    fp.center_dim = static_cast<int>(nullspace(f, rows, n).size());
  }
  {
    SVector tr(z(n), f.zero());
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m) tr[z(k)] = f.add(tr[z(k)], a.c(k, m, m));
    SMatrix t = zero_matrix(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!f.is_zero(a.c(i, j, k))) t[z(i)][z(j)] = f.add(t[z(i)][z(j)], f.mul(a.c(i, j, k), tr[z(k)]));
    fp.trace_rank = rank(f, t);
  }
  if (a.derivations.size() == 1 && a.derivations[0].twist >= 0) {
    const GroupAction& g = a.actions[z(a.derivations[0].twist)];
    const Scalar zinv = f.inv(f.zeta());
    const Filtration filt = compute_filtration(a);
    SMatrix rows;
    SVector rhs;
    auto push = [&](const SMatrix& m, const SVector& b) {
      for (int i = 0; i < n; ++i) {
        rows.push_back(m[z(i)]);
        rhs.push_back(b[z(i)]);
      }
    };
    push(sub(f, g.matrix, scale(f, identity_matrix(f, n), zinv)), SVector(z(n), f.zero()));
    push(a.derivations[0].matrix, a.unit);
    if (!filt.levels.empty())
      for (auto& zv : filt.levels[0]) push(sub(f, a.left_mult(zv), a.right_mult(matvec(f, g.matrix, zv))), SVector(z(n), f.zero()));
    const auto y = solve(f, rows, rhs);
    if (y && nullspace(f, rows, n).empty()) {
      SVector pw = a.unit;
      for (int t = 0; t < g.order; ++t) pw = a.multiply(pw, *y);
      int lead = 0;
      while (lead < n && f.is_zero(a.unit[z(lead)])) ++lead;
      const Scalar lam = f.mul(pw[z(lead)], f.inv(a.unit[z(lead)]));
      if (pw == scaled(f, a.unit, lam)) fp.lambda = lam;
    }
  }
  return fp;
}

EquivariantAlgebra rebase(const EquivariantAlgebra& a, const SMatrix& change) {
  const ExactField& f = a.field;
  const int n = a.dim;
  std::vector<SVector> cols;
  for (int j = 0; j < n; ++j) cols.push_back(column(change, j));
  auto coords = [&](const SVector& v) {
    auto x = solve(f, change, v);
    if (!x) fail(ErrorCode::InvalidInput, "basis change is singular");
    return *x;
  };
  if (rank(f, change) != n) fail(ErrorCode::InvalidInput, "basis change is singular");
  EquivariantAlgebra b = a;
  for (int i = 0; i < n; ++i) b.basis[z(i)] = "v" + std::to_string(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SVector c = coords(a.multiply(cols[z(i)], cols[z(j)]));
      for (int k = 0; k < n; ++k) b.mult[(z(i) * z(n) + z(j)) * z(n) + z(k)] = c[z(k)];
    }
  b.unit = coords(a.unit);
  auto conj = [&](const SMatrix& m) {
    std::vector<SVector> out;
    for (auto& c : cols) out.push_back(coords(matvec(f, m, c)));
    return from_columns(f, out, n);
  };
  for (auto& g : b.actions) g.matrix = conj(g.matrix);
  for (auto& d : b.derivations) d.matrix = conj(d.matrix);
  return b;
}

}  // namespace ftcat
