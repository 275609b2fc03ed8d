#include "ftcat/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ftcat/error.hpp"

namespace ftcat {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

Poly Poly::scaled(const Rational& s) const {
  std::vector<Rational> v(c_);
  for (auto& c : v) c *= s;
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> r(a.coeffs());
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = r[static_cast<std::size_t>(i)] * inv_lead;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::InconsistentData, "inexact polynomial division");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = 1 / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  Poly g = gcd(p, p.derivative());
  return exact_div(p, g).monic();
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(1), base = p;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Poly::constant(*it);
  return acc;
}

Integer content(const std::vector<Integer>& coeffs) {
  Integer g = 0;
  for (const auto& c : coeffs) g = gcd(g, c);
  return g;
}

std::vector<Integer> primitive_integer(const Poly& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(Integer(c * den));
  Integer g = content(out);
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? '-' : '+');
    }
    first = false;
    const std::string cs = to_string(c);
    const bool needs_parens = c.get_den() != 1;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (c != 1) os << (needs_parens ? "(" + cs + ")" : cs);
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string to_string(const std::vector<Integer>& coeffs) { return to_string(Poly::from_integers(coeffs)); }

SturmSequence::SturmSequence(const Poly& squarefree) {
  if (squarefree.is_zero()) return;
  chain_.push_back(squarefree);
  chain_.push_back(squarefree.derivative());
  while (!chain_.back().is_zero()) {
    Poly r = chain_[chain_.size() - 2] % chain_.back();
    chain_.push_back(-r);
  }
  chain_.pop_back();
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& p : chain_) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return sign_changes(a) - sign_changes(b);
}

Rational root_bound(const Poly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  Rational bound = 1 + m;
  Rational pow2 = 1;
  while (pow2 < bound) pow2 *= 2;
  return pow2;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval eval_interval(const Poly& p, const Interval& x) {
  Interval acc{0, 0};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

Poly det(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  Poly prev = Poly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = Poly{};
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

Poly charpoly(const QMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(ErrorCode::NonSquare, "characteristic polynomial of a non-square matrix");
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> c{-m[i][j]};
      if (i == j) c.push_back(1);
      a[i][j] = Poly(std::move(c));
    }
  return det(std::move(a));
}

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    q[i].reserve(m[i].size());
    for (auto v : m[i]) q[i].emplace_back(static_cast<long>(v));
  }
  return q;
}

Poly charpoly(const IntMatrix& m) { return charpoly(to_rational(m)); }

namespace {

// Sylvester resultant in y of f(y) and g(x, y), both given as polynomials in
// y whose coefficients are polynomials in x.
Poly resultant_y(const std::vector<Poly>& f, const std::vector<Poly>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
  return det(std::move(s));
}

Rational binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace

Poly product_annihilator(const Poly& f, const Poly& g) {
  // Res_y(f(y), y^n g(x / y)).
  std::vector<Poly> fy, gy;
  for (const auto& c : f.coeffs()) fy.push_back(Poly::constant(c));
  const int n = g.degree();
  gy.resize(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) gy[static_cast<std::size_t>(n - j)] = Poly::monomial(g.coeff(j), j);
  return resultant_y(fy, gy);
}

Poly sum_annihilator(const Poly& f, const Poly& g) {
  // Res_y(f(y), g(x - y)); expand g(x - y) = sum_j g_j sum_i C(j,i) x^(j-i) (-y)^i.
  std::vector<Poly> fy, gy(static_cast<std::size_t>(g.degree()) + 1);
  for (const auto& c : f.coeffs()) fy.push_back(Poly::constant(c));
  for (int j = 0; j <= g.degree(); ++j) {
    for (int i = 0; i <= j; ++i) {
      Rational c = g.coeff(j) * binomial(static_cast<unsigned>(j), static_cast<unsigned>(i));
      if (i % 2) c = -c;
      gy[static_cast<std::size_t>(i)] += Poly::monomial(c, j - i);
    }
  }
  return resultant_y(fy, gy);
}

}  // namespace ftcat
