#include "ftcat/field.hpp"

#include <algorithm>
#include <cctype>

#include "ftcat/error.hpp"

namespace ftcat {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Poly cyclotomic_poly(int l) {
  Poly num = Poly::monomial(1, l) - Poly::constant(1);
  for (int d = 1; d < l; ++d)
    if (l % d == 0) num = exact_div(num, cyclotomic_poly(d));
  return num;
}

Rational reduce_mod(const Rational& q, long p) {
  Integer num = q.get_num() % p;
  Integer den = q.get_den() % p;
  if (den == 0) fail(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
  Integer inv;
  const Integer pp = p;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
  Integer r = (num * inv) % p;
  if (r < 0) r += p;
  return Rational(r);
}

}  // namespace

struct ExactField::Data {
  Kind kind = Kind::Rationals;
  long p = 0;
  int l = 1;
  Poly modulus;                // cyclotomic only
  std::vector<Scalar> xpow;    // x^k mod Phi_l for k < 2 deg - 1
  Rational zeta_mod_p = 1;     // prime fields with a root of unity
};

ExactField::ExactField() : d_(std::make_shared<Data>()) {}

ExactField ExactField::rationals() { return ExactField(); }

ExactField ExactField::prime(int p, int root_order) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (root_order < 1 || (p - 1) % root_order != 0)
    fail(ErrorCode::BadParameter, "GF(" + std::to_string(p) + ") has no primitive root of unity of order " +
                                      std::to_string(root_order));
  auto d = std::make_shared<Data>();
  d->kind = Kind::Prime;
  d->p = p;
  d->l = root_order;
  // smallest element of exact order root_order
  for (long a = 1; a < p && root_order > 1; ++a) {
    const auto pw = [&](long e) { return powmod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(p)); };
    if (pw(root_order) != 1) continue;
    bool primitive = true;
    for (int q = 1; q < root_order; ++q)
      if (root_order % q == 0 && pw(q) == 1) primitive = false;
    if (primitive) {
      d->zeta_mod_p = Rational(Integer(a));
      break;
    }
  }
  return ExactField(d);
}

ExactField ExactField::cyclotomic(int l) {
  if (l < 1 || l > 60) fail(ErrorCode::BadParameter, "cyclotomic order must be between 1 and 60");
  if (l <= 2) {
    auto d = std::make_shared<Data>();
    d->l = l;
    d->kind = Kind::Cyclotomic;
    d->modulus = l == 1 ? Poly::x() - Poly::constant(1) : Poly::x() + Poly::constant(1);
    d->xpow = {{Rational(1)}};
    return ExactField(d);
  }
  auto d = std::make_shared<Data>();
  d->kind = Kind::Cyclotomic;
  d->l = l;
  d->modulus = cyclotomic_poly(l);
  const int n = d->modulus.degree();
  for (int k = 0; k <= 2 * n - 2; ++k) {
    const Poly r = Poly::monomial(1, k) % d->modulus;
    Scalar s(z(n));
    for (int i = 0; i <= r.degree(); ++i) s[z(i)] = r.coeff(i);
    d->xpow.push_back(std::move(s));
  }
  return ExactField(d);
}

ExactField ExactField::parse_name(const std::string& name) {
  if (name == "Q" || name == "QQ") return rationals();
  if (name.rfind("Q(zeta_", 0) == 0 && name.back() == ')') {
    const std::string n = name.substr(7, name.size() - 8);
    if (n.empty() || !std::all_of(n.begin(), n.end(), ::isdigit) || n.size() > 3)
      fail(ErrorCode::InvalidInput, "bad field '" + name + "'");
    return cyclotomic(std::stoi(n));
  }
  if (name.rfind("GF(", 0) == 0 && name.back() == ')') {
    const std::string body = name.substr(3, name.size() - 4);
    const auto comma = body.find(',');
    const std::string ps = body.substr(0, comma);
    const std::string ls = comma == std::string::npos ? "1" : body.substr(comma + 1);
    auto digits = [](const std::string& s) { return !s.empty() && s.size() < 7 && std::all_of(s.begin(), s.end(), ::isdigit); };
    if (!digits(ps) || !digits(ls)) fail(ErrorCode::InvalidInput, "bad field '" + name + "'");
    return prime(std::stoi(ps), std::stoi(ls));
  }
  fail(ErrorCode::InvalidInput, "unknown field '" + name + "'");
}

ExactField::Kind ExactField::kind() const { return d_->kind; }
int ExactField::characteristic() const { return static_cast<int>(d_->p); }
int ExactField::root_order() const { return d_->l; }
int ExactField::degree() const { return d_->kind == Kind::Cyclotomic ? std::max(1, d_->modulus.degree()) : 1; }

std::string ExactField::name() const {
  switch (d_->kind) {
    case Kind::Rationals: return "Q";
    case Kind::Prime:
      return "GF(" + std::to_string(d_->p) + (d_->l > 1 ? "," + std::to_string(d_->l) : std::string()) + ")";
    case Kind::Cyclotomic: return "Q(zeta_" + std::to_string(d_->l) + ")";
  }
  return "Q";
}

bool operator==(const ExactField& a, const ExactField& b) {
  return a.d_->kind == b.d_->kind && a.d_->p == b.d_->p && a.d_->l == b.d_->l;
}

Scalar ExactField::zero() const { return Scalar(z(degree())); }

Scalar ExactField::one() const { return from_rational(1); }

Scalar ExactField::from_rational(const Rational& q) const {
  Scalar s = zero();
  s[0] = d_->kind == Kind::Prime ? reduce_mod(q, d_->p) : q;
  return s;
}

Scalar ExactField::zeta() const {
  switch (d_->kind) {
    case Kind::Rationals: return one();
    case Kind::Prime: return from_rational(d_->zeta_mod_p);
    case Kind::Cyclotomic:
      if (d_->l <= 2) return from_rational(d_->l == 1 ? 1 : -1);
      {
        Scalar s = zero();
        s[1] = 1;
        return s;
      }
  }
  return one();
}

Scalar ExactField::add(const Scalar& a, const Scalar& b) const {
  Scalar s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  if (d_->kind == Kind::Prime && s[0] >= d_->p) s[0] -= d_->p;
  return s;
}

Scalar ExactField::neg(const Scalar& a) const {
  Scalar s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  if (d_->kind == Kind::Prime && s[0] != 0) s[0] += d_->p;
  return s;
}

Scalar ExactField::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar ExactField::mul(const Scalar& a, const Scalar& b) const {
  if (d_->kind == Kind::Prime) {
    Integer r = (a[0].get_num() * b[0].get_num()) % d_->p;
    return {Rational(r)};
  }
  if (a.size() == 1) return {a[0] * b[0]};
  const int n = degree();
  Scalar s(z(n));
  for (int i = 0; i < n; ++i) {
    if (a[z(i)] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[z(j)] == 0) continue;
      const Rational c = a[z(i)] * b[z(j)];
      const Scalar& red = d_->xpow[z(i + j)];
      for (int k = 0; k < n; ++k)
        if (red[z(k)] != 0) s[z(k)] += c * red[z(k)];
    }
  }
  return s;
}

Scalar ExactField::inv(const Scalar& a) const {
  if (is_zero(a)) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (d_->kind == Kind::Prime) {
    Integer r;
    const Integer pp = d_->p;
    mpz_invert(r.get_mpz_t(), a[0].get_num_mpz_t(), pp.get_mpz_t());
    return {Rational(r)};
  }
  if (a.size() == 1) return {1 / a[0]};
  const ExtendedGcd e = extended_gcd(Poly(a), d_->modulus);
  const Poly s = e.s % d_->modulus;
  Scalar out = zero();
  for (int i = 0; i <= s.degree(); ++i) out[z(i)] = s.coeff(i);
  return out;
}

Scalar ExactField::pow(const Scalar& a, long e) const {
  Scalar base = e < 0 ? inv(a) : a;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Scalar r = one();
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

bool ExactField::is_zero(const Scalar& a) const {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

bool ExactField::is_one(const Scalar& a) const { return is_zero(sub(a, one())); }

std::string ExactField::to_string(const Scalar& a) const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::string coef = ftcat::to_string(a[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    std::string term;
    if (mono.empty()) term = coef;
    else if (a[i] == 1) term = mono;
    else if (a[i] == -1) term = "-" + mono;
    else term = coef + "*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Scalar ExactField::parse(const std::string& raw) const {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) fail(ErrorCode::InvalidInput, "empty scalar");
  Scalar total = zero();
  std::size_t i = 0;
  while (i < t.size()) {
    bool negative = false;
    if (t[i] == '+' || t[i] == '-') {
      negative = t[i] == '-';
      ++i;
    }
    std::size_t j = i;
    while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == '/')) ++j;
    const bool has_number = j > i;
    Scalar term = one();
    if (has_number) {
      Rational q;
      try {
        q = Rational(t.substr(i, j - i));
      } catch (const std::exception&) {
        fail(ErrorCode::InvalidInput, "bad scalar '" + raw + "'");
      }
      if (q.get_den() == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + raw + "'");
      q.canonicalize();
      term = from_rational(q);
      i = j;
      if (i < t.size() && t[i] == '*') ++i;
    }
    const bool has_zeta = i < t.size() && t[i] == 'z';
    if (has_zeta) {
      ++i;
      if (t.compare(i, 3, "eta") == 0) i += 3;
      long e = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::size_t k = i;
        if (k < t.size() && t[k] == '-') ++k;
        std::size_t m = k;
        while (m < t.size() && std::isdigit(static_cast<unsigned char>(t[m]))) ++m;
        if (m == k || m - k > 6) fail(ErrorCode::InvalidInput, "bad exponent in '" + raw + "'");
        e = std::stol(t.substr(i, m - i));
        i = m;
      }
      if (root_order() == 1 && kind() != Kind::Cyclotomic) fail(ErrorCode::InvalidInput, "field " + name() + " has no zeta");
      term = mul(term, pow(zeta(), e));
    }
    if (!has_number && !has_zeta) fail(ErrorCode::InvalidInput, "bad scalar '" + raw + "'");
    if (i < t.size() && t[i] != '+' && t[i] != '-') fail(ErrorCode::InvalidInput, "bad scalar '" + raw + "'");
    total = add(total, negative ? neg(term) : term);
  }
  return total;
}

SMatrix identity_matrix(const ExactField& f, int n) {
  SMatrix m = zero_matrix(f, n, n);
  for (int i = 0; i < n; ++i) m[z(i)][z(i)] = f.one();
  return m;
}

SMatrix zero_matrix(const ExactField& f, int rows, int cols) {
  return SMatrix(z(rows), SVector(z(cols), f.zero()));
}

SMatrix matmul(const ExactField& f, const SMatrix& a, const SMatrix& b) {
  const int r = static_cast<int>(a.size());
  const int inner = static_cast<int>(b.size());
  const int c = inner ? static_cast<int>(b[0].size()) : 0;
  SMatrix out = zero_matrix(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < inner; ++k) {
      if (f.is_zero(a[z(i)][z(k)])) continue;
      for (int j = 0; j < c; ++j)
        if (!f.is_zero(b[z(k)][z(j)])) out[z(i)][z(j)] = f.add(out[z(i)][z(j)], f.mul(a[z(i)][z(k)], b[z(k)][z(j)]));
    }
  return out;
}

SVector matvec(const ExactField& f, const SMatrix& a, const SVector& v) {
  SVector out(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!f.is_zero(a[i][k]) && !f.is_zero(v[k])) out[i] = f.add(out[i], f.mul(a[i][k], v[k]));
  return out;
}

SMatrix transpose(const SMatrix& m) {
  if (m.empty()) return {};
  SMatrix t(m[0].size(), SVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

bool is_zero_vector(const ExactField& f, const SVector& v) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar& s) { return f.is_zero(s); });
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const ExactField& f, SMatrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < cols && row < rows; ++c) {
    int sel = -1;
    for (int r = row; r < rows && sel < 0; ++r)
      if (!f.is_zero(m[z(r)][z(c)])) sel = r;
    if (sel < 0) continue;
    std::swap(m[z(sel)], m[z(row)]);
    const Scalar inv = f.inv(m[z(row)][z(c)]);
    for (auto& x : m[z(row)]) x = f.mul(x, inv);
    for (int r = 0; r < rows; ++r) {
      if (r == row || f.is_zero(m[z(r)][z(c)])) continue;
      const Scalar factor = m[z(r)][z(c)];
      for (int k = c; k < cols; ++k)
        if (!f.is_zero(m[z(row)][z(k)])) m[z(r)][z(k)] = f.sub(m[z(r)][z(k)], f.mul(factor, m[z(row)][z(k)]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const ExactField& f, SMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(f, m, static_cast<int>(m[0].size())).size());
}

std::vector<SVector> nullspace(const ExactField& f, SMatrix m, int cols) {
  const std::vector<int> pivots = rref(f, m, cols);
  std::vector<bool> is_pivot(z(cols), false);
  for (int p : pivots) is_pivot[z(p)] = true;
  std::vector<SVector> out;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[z(free)]) continue;
    SVector v(z(cols), f.zero());
    v[z(free)] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[z(pivots[r])] = f.neg(m[r][z(free)]);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<SVector> solve(const ExactField& f, const SMatrix& m, const SVector& b) {
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  SMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const std::vector<int> pivots = rref(f, aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  SVector x(z(cols), f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[z(pivots[r])] = aug[r][z(cols)];
  return x;
}

SVector Echelon::reduce(SVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int c = pivots_[r];
    if (f_.is_zero(v[z(c)])) continue;
    const Scalar factor = v[z(c)];
    for (int k = c; k < n_; ++k)
      if (!f_.is_zero(rows_[r][z(k)])) v[z(k)] = f_.sub(v[z(k)], f_.mul(factor, rows_[r][z(k)]));
  }
  return v;
}

bool Echelon::insert(const SVector& v) {
  SVector r = reduce(v);
  int c = 0;
  while (c < n_ && f_.is_zero(r[z(c)])) ++c;
  if (c == n_) return false;
  const Scalar inv = f_.inv(r[z(c)]);
  for (auto& x : r) x = f_.mul(x, inv);
  // keep earlier rows reduced at the new pivot so reduce() stays one pass
  for (auto& row : rows_) {
    if (f_.is_zero(row[z(c)])) continue;
    const Scalar factor = row[z(c)];
    for (int k = 0; k < n_; ++k)
      if (!f_.is_zero(r[z(k)])) row[z(k)] = f_.sub(row[z(k)], f_.mul(factor, r[z(k)]));
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(c);
  inserted_.push_back(v);
  return true;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

ModPImage::ModPImage(const ExactField& f, int seed) : f_(f) {
  if (f.kind() == ExactField::Kind::Prime) {
    p_ = static_cast<std::uint64_t>(f.characteristic());
    return;
  }
  const std::uint64_t l = static_cast<std::uint64_t>(f.kind() == ExactField::Kind::Cyclotomic ? f.root_order() : 1);
  // primes p = 1 mod l just below 2^31, skipping `seed` of them
  std::uint64_t cand = ((std::uint64_t{1} << 31) / l) * l + 1;
  int skipped = 0;
  while (true) {
    cand -= l;
    if (!is_prime(static_cast<long>(cand))) continue;
    if (skipped++ < seed) continue;
    break;
  }
  p_ = cand;
  if (f.kind() != ExactField::Kind::Cyclotomic || l <= 2) {
    root_ = l == 2 ? p_ - 1 : 1;
    return;
  }
  // primitive l-th root: a^((p-1)/l) for the first a giving exact order l
  for (std::uint64_t a = 2;; ++a) {
    const std::uint64_t r = powmod(a, (p_ - 1) / l, p_);
    bool primitive = true;
    for (std::uint64_t q = 1; q < l; ++q)
      if (l % q == 0 && powmod(r, q, p_) == 1) primitive = false;
    if (primitive) {
      root_ = r;
      return;
    }
  }
}

std::optional<std::uint64_t> ModPImage::map(const Scalar& s) const {
  unsigned __int128 acc = 0, pw = 1;
  for (const Rational& q : s) {
    if (q != 0) {
      Integer num = q.get_num() % static_cast<unsigned long>(p_);
      if (num < 0) num += static_cast<unsigned long>(p_);
      Integer den = q.get_den() % static_cast<unsigned long>(p_);
      if (den == 0) return std::nullopt;
      const std::uint64_t inv = powmod(den.get_ui(), p_ - 2, p_);
      acc = (acc + pw * (static_cast<unsigned __int128>(num.get_ui()) * inv % p_)) % p_;
    }
    pw = pw * root_ % p_;
  }
  return static_cast<std::uint64_t>(acc);
}

bool EchelonModP::insert(std::vector<std::uint64_t> v) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int c = pivots_[r];
    const std::uint64_t factor = v[z(c)];
    if (factor == 0) continue;
    const auto& row = rows_[r];
    for (int k = c; k < n_; ++k)
      if (row[z(k)]) v[z(k)] = (v[z(k)] + (p_ - factor) * row[z(k)]) % p_;
  }
  int c = 0;
  while (c < n_ && v[z(c)] == 0) ++c;
  if (c == n_) return false;
  const std::uint64_t inv = powmod(v[z(c)], p_ - 2, p_);
  for (auto& x : v) x = x * inv % p_;
  rows_.push_back(std::move(v));
  pivots_.push_back(c);
  return true;
}

}  // namespace ftcat
