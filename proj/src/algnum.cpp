#include "ftcat/algnum.hpp"

#include <algorithm>
#include <sstream>

#include "ftcat/error.hpp"
#include "ftcat/factor.hpp"

namespace ftcat {

namespace {

// Nearest integer, halves away from zero.
Rational floor_half(const Rational& q) {
  Rational t = abs(q) + Rational(1, 2);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return Rational(q < 0 ? Integer(-f) : f);
}

}  // namespace

RealAlgebraic::RealAlgebraic(const Rational& q) : lo_(q), hi_(q) {
  Rational c = q;
  c.canonicalize();
  minpoly_ = {-Integer(c.get_num()), Integer(c.get_den())};
  lo_ = hi_ = c;
}

RealAlgebraic::RealAlgebraic(std::vector<Integer> minpoly, Rational lo, Rational hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (degree() == 1) lo_ = hi_ = Rational(-minpoly_[0], minpoly_[1]);
  lo_.canonicalize();
  hi_.canonicalize();
}

Rational RealAlgebraic::rational_value() const {
  if (!is_rational()) fail(ErrorCode::InvalidInput, "value is irrational");
  return lo_;
}

void RealAlgebraic::bisect() {
  if (is_rational()) return;
  const Poly p = minpoly_poly();
  const Rational mid = (lo_ + hi_) / 2;
  if (sgn(p.eval(lo_)) * sgn(p.eval(mid)) < 0)
    hi_ = mid;
  else
    lo_ = mid;
}

RealAlgebraic RealAlgebraic::refined(const Rational& w) const {
  RealAlgebraic r = *this;
  while (r.hi_ - r.lo_ > w) r.bisect();
  return r;
}

double RealAlgebraic::approx() const {
  RealAlgebraic r = refined(Rational(1, Integer(1) << 60));
  return Rational((r.lo_ + r.hi_) / 2).get_d();
}

Order cmp(RealAlgebraic a, RealAlgebraic b) {
  if (a.is_rational() && b.is_rational()) {
    const int c = ::cmp(a.lo(), b.lo());
    return c < 0 ? Order::Less : c > 0 ? Order::Greater : Order::Equal;
  }
  while (true) {
    if (a.hi() <= b.lo()) return Order::Less;
    if (b.hi() <= a.lo()) return Order::Greater;
    if (!a.is_rational() && a.minpoly() == b.minpoly()) {
      const Rational lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
      if (SturmSequence(a.minpoly_poly()).count(lo, hi) == 1) return Order::Equal;
    }
    if (a.hi() - a.lo() >= b.hi() - b.lo())
      a.bisect();
    else
      b.bisect();
  }
}

int count_closed(const SturmSequence& st, const Poly& s, const Interval& I) {
  return st.count(I.lo, I.hi) + (s.eval(I.lo) == 0 ? 1 : 0);
}

RealAlgebraic root_in(const Poly& s, const Interval& I) {
  if (s.degree() == 1) return RealAlgebraic(primitive_integer(s), I.lo, I.hi);
  for (auto& f : factor_squarefree(s)) {
    const Poly fp = Poly::from_integers(f);
    if (count_closed(SturmSequence(fp), fp, I) == 1) return RealAlgebraic(f, I.lo, I.hi);
  }
  fail(ErrorCode::InconsistentData, "no root in enclosure");
}

namespace {

RealAlgebraic combine(RealAlgebraic a, RealAlgebraic b, bool product) {
  if (a.is_rational() && b.is_rational())
    return RealAlgebraic(product ? Rational(a.lo() * b.lo()) : Rational(a.lo() + b.lo()));
  if (product && ((a.is_rational() && a.lo() == 0) || (b.is_rational() && b.lo() == 0))) return RealAlgebraic(0);
  const Poly pa = a.minpoly_poly(), pb = b.minpoly_poly();
  const Poly s = squarefree_part(product ? product_annihilator(pa, pb) : sum_annihilator(pa, pb));
  const SturmSequence st(s);
  while (true) {
    const Interval I = product ? a.enclosure() * b.enclosure() : a.enclosure() + b.enclosure();
    if (count_closed(st, s, I) == 1) return root_in(s, I);
    a.bisect();
    b.bisect();
  }
}

}  // namespace

RealAlgebraic real_add(RealAlgebraic a, RealAlgebraic b) { return combine(std::move(a), std::move(b), false); }
RealAlgebraic real_mul(RealAlgebraic a, RealAlgebraic b) { return combine(std::move(a), std::move(b), true); }

RealAlgebraic real_neg(const RealAlgebraic& a) {
  if (a.is_rational()) return RealAlgebraic(-a.lo());
  std::vector<Integer> m = a.minpoly();
  for (std::size_t i = 1; i < m.size(); i += 2) m[i] = -m[i];
  if (m.back() < 0)
    for (auto& c : m) c = -c;
  return RealAlgebraic(m, -a.hi(), -a.lo());
}

RealAlgebraic perron_root(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) fail(ErrorCode::NonSquare, "empty matrix");
  std::int64_t max_row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(ErrorCode::NonSquare, "row " + std::to_string(i) + " has length " + std::to_string(m[i].size()));
    std::int64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] < 0) fail(ErrorCode::NegativeEntry, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      row += m[i][j];
    }
    max_row = std::max(max_row, row);
  }
  const Poly s = squarefree_part(charpoly(m));
  const SturmSequence st(s);
  Rational hi = 1;
  while (hi <= max_row) hi *= 2;
  Rational lo = 0;
  if (st.count(lo, hi) == 0) return RealAlgebraic(0);
  const Rational quarter(1, 4);
  while (st.count(lo, hi) > 1 || hi - lo > quarter) {
    const Rational mid = (lo + hi) / 2;
    if (st.count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  for (auto& f : factor_squarefree(s)) {
    const Poly fp = Poly::from_integers(f);
    if (SturmSequence(fp).count(lo, hi) == 1) return RealAlgebraic(f, lo, hi);
  }
  fail(ErrorCode::InconsistentData, "Perron root lost during factorization");
}

std::string to_decimal(RealAlgebraic a, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational r;
  while (true) {
    const Rational l = floor_half(a.lo() * scale), h = floor_half(a.hi() * scale);
    if (l == h) {
      r = l;
      break;
    }
    a.bisect();
  }
  Integer v = r.get_num();
  std::string sign = v < 0 ? "-" : "";
  v = abs(v);
  std::string s = v.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s = std::string(static_cast<std::size_t>(digits) - s.size() + 1, '0') + s;
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return sign + s;
}

std::string render(const RealAlgebraic& a, int digits) {
  std::ostringstream os;
  os << to_string(a.minpoly()) << "; ";
  if (!a.is_rational()) os << "[" << to_string(a.lo()) << ", " << to_string(a.hi()) << "]; ";
  os << "≈ " << to_decimal(a, digits);
  return os.str();
}

FieldPtr make_field(const RealAlgebraic& generator) {
  auto f = std::make_shared<NumberField>();
  f->generator = generator;
  f->modulus = generator.minpoly_poly().monic();
  return f;
}

FieldPtr rational_field() {
  static const FieldPtr q = make_field(RealAlgebraic(0));
  return q;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->degree() == 1 && b->degree() == 1) return true;
  return a->modulus == b->modulus && equal(a->generator, b->generator);
}

NFElement::NFElement(FieldPtr f, std::vector<Rational> coords) : field_(std::move(f)), coords_(std::move(coords)) {
  const auto n = static_cast<std::size_t>(field_->degree());
  if (coords_.size() > n) {
    Poly r = Poly(coords_) % field_->modulus;
    coords_ = r.coeffs();
  }
  coords_.resize(n, Rational(0));
}

NFElement NFElement::rational(FieldPtr f, const Rational& q) { return NFElement(std::move(f), {q}); }

NFElement NFElement::generator(FieldPtr f) {
  if (f->degree() == 1) return NFElement(f, {f->generator.lo()});
  return NFElement(std::move(f), {Rational(0), Rational(1)});
}

bool NFElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool NFElement::is_rational() const {
  return std::all_of(coords_.begin() + (coords_.empty() ? 0 : 1), coords_.end(),
                     [](const Rational& c) { return c == 0; });
}

Rational NFElement::rational_value() const {
  if (!is_rational()) fail(ErrorCode::InvalidInput, "element is not rational");
  return coords_.empty() ? Rational(0) : coords_[0];
}

namespace {

const FieldPtr& common(const NFElement& a, const NFElement& b) {
  if (!same_field(a.field(), b.field())) fail(ErrorCode::GeneratorMismatch, "elements live in different fields");
  return a.field();
}

}  // namespace

NFElement operator+(const NFElement& a, const NFElement& b) {
  const auto& f = common(a, b);
  std::vector<Rational> c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
  return NFElement(f, std::move(c));
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  const auto& f = common(a, b);
  std::vector<Rational> c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
  return NFElement(f, std::move(c));
}

NFElement operator-(const NFElement& a) {
  std::vector<Rational> c = a.coords();
  for (auto& x : c) x = -x;
  return NFElement(a.field(), std::move(c));
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  const auto& f = common(a, b);
  if (f->degree() == 1) return NFElement(f, {a.coords()[0] * b.coords()[0]});
  return NFElement(f, ((a.as_poly() * b.as_poly()) % f->modulus).coeffs());
}

NFElement operator/(const NFElement& a, const NFElement& b) {
  const auto& f = common(a, b);
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in number field");
  if (f->degree() == 1) return NFElement(f, {a.coords()[0] / b.coords()[0]});
  const ExtendedGcd e = extended_gcd(b.as_poly(), f->modulus);
  return a * NFElement(f, e.s.coeffs());
}

bool operator==(const NFElement& a, const NFElement& b) {
  if (!same_field(a.field(), b.field())) return false;
  return a.coords() == b.coords();
}

NFElement nf_arith(const NFElement& a, const NFElement& b, NfOp op) {
  switch (op) {
    case NfOp::Add: return a + b;
    case NfOp::Sub: return a - b;
    case NfOp::Mul: return a * b;
    case NfOp::Div: return a / b;
  }
  return a;
}

QMatrix mult_matrix(const NFElement& a) {
  const auto n = static_cast<std::size_t>(a.field()->degree());
  QMatrix m(n, std::vector<Rational>(n));
  NFElement basis = NFElement::rational(a.field(), 1);
  const NFElement gen = NFElement::generator(a.field());
  for (std::size_t j = 0; j < n; ++j) {
    const NFElement col = a * basis;
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords()[i];
    basis = basis * gen;
  }
  return m;
}

std::vector<Integer> minimal_polynomial(const NFElement& a) {
  if (a.is_rational()) return RealAlgebraic(a.rational_value()).minpoly();
  return primitive_integer(squarefree_part(charpoly(mult_matrix(a))));
}

bool is_algebraic_integer(const NFElement& a) { return minimal_polynomial(a).back() == 1; }

Interval enclosure(const NFElement& a) { return eval_interval(a.as_poly(), a.field()->generator.enclosure()); }

RealAlgebraic to_real(const NFElement& a) {
  if (a.is_rational()) return RealAlgebraic(a.rational_value());
  const Poly s = Poly::from_integers(minimal_polynomial(a));
  const SturmSequence st(s);
  RealAlgebraic g = a.field()->generator;
  const Poly p = a.as_poly();
  while (true) {
    const Interval I = eval_interval(p, g.enclosure());
    if (count_closed(st, s, I) == 1) return RealAlgebraic(primitive_integer(s), I.lo, I.hi);
    g.bisect();
  }
}

int sign(const NFElement& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sgn(a.rational_value());
  RealAlgebraic g = a.field()->generator;
  const Poly p = a.as_poly();
  while (true) {
    const Interval I = eval_interval(p, g.enclosure());
    if (I.lo > 0) return 1;
    if (I.hi < 0) return -1;
    g.bisect();
  }
}

std::vector<NFElement> field_solve_eigvector(const QMatrix& m, const NFElement& eigval, int normalize_index) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(ErrorCode::NonSquare, "matrix is not square");
  if (normalize_index < 0 || static_cast<std::size_t>(normalize_index) >= n)
    fail(ErrorCode::IndexOutOfRange, "normalize index " + std::to_string(normalize_index));
  const FieldPtr& f = eigval.field();
  std::vector<std::vector<NFElement>> a(n, std::vector<NFElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = NFElement::rational(f, m[i][j]);
      if (i == j) a[i][j] = a[i][j] - eigval;
    }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    const NFElement inv = NFElement::rational(f, 1) / a[r][c];
    for (std::size_t j = c; j < n; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const NFElement factor = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - factor * a[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  const std::size_t nullity = n - r;
  if (nullity == 0) fail(ErrorCode::NotAnEigenvalue, "matrix minus eigenvalue is invertible");
  if (nullity > 1) fail(ErrorCode::EigenspaceDimensionNotOne, "eigenspace has dimension " + std::to_string(nullity));
  std::size_t free_col = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) == pivot_col.end()) free_col = c;
  std::vector<NFElement> v(n, NFElement::rational(f, 0));
  v[free_col] = NFElement::rational(f, 1);
  for (std::size_t i = 0; i < r; ++i) v[static_cast<std::size_t>(pivot_col[i])] = -a[i][free_col];
  const NFElement pivot = v[static_cast<std::size_t>(normalize_index)];
  if (pivot.is_zero()) fail(ErrorCode::InvalidInput, "eigenvector vanishes at the normalization index");
  for (auto& x : v) x = x / pivot;
  return v;
}

std::vector<NFElement> field_solve_eigvector(const IntMatrix& m, const NFElement& eigval, int normalize_index) {
  return field_solve_eigvector(to_rational(m), eigval, normalize_index);
}

}  // namespace ftcat
