#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ftcat {

using Integer = mpz_class;
using Rational = mpq_class;

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using QMatrix = std::vector<std::vector<Rational>>;

/// Univariate polynomial with rational coefficients, low degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(1, 1); }
  static Poly from_integers(const std::vector<Integer>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(const Rational& s) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a) { return a.scaled(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Quotient of an exact division; throws if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtendedGcd {
  Poly g, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& p);
Poly pow(const Poly& p, unsigned e);
Poly compose(const Poly& p, const Poly& q);

// Primitive integer form: integer coefficients with content 1 and positive
// leading coefficient.
std::vector<Integer> primitive_integer(const Poly& p);
Integer content(const std::vector<Integer>& coeffs);

// Renders like "x^2-5x+5".
std::string to_string(const Poly& p);
std::string to_string(const std::vector<Integer>& coeffs);
std::string to_string(const Rational& q);

/// Sturm chain of a squarefree polynomial; counts distinct real roots.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& squarefree);
  int sign_changes(const Rational& x) const;
  // Number of distinct real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;

 private:
  std::vector<Poly> chain_;
};

// Upper bound on the absolute value of every root (Cauchy bound, rounded up
// to a power of two).
Rational root_bound(const Poly& p);

// Closed rational interval [lo, hi].
struct Interval {
  Rational lo, hi;
};
Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Encloses p(x) for x in the interval (Horner in interval arithmetic).
Interval eval_interval(const Poly& p, const Interval& x);

// det(xI - M), computed by fraction-free (Bareiss) elimination over Q[x].
Poly charpoly(const QMatrix& m);
Poly charpoly(const IntMatrix& m);
// Determinant of a polynomial matrix, Bareiss with row pivoting.
Poly det(std::vector<std::vector<Poly>> m);

// Resultant-based polynomials for sums and products of algebraic numbers:
// if f(a) = 0 and g(b) = 0 then the returned polynomial vanishes at a*b
// (resp. a+b). Neither result is reduced.
Poly product_annihilator(const Poly& f, const Poly& g);
Poly sum_annihilator(const Poly& f, const Poly& g);

QMatrix to_rational(const IntMatrix& m);

}  // namespace ftcat
