#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ftcat/poly.hpp"

namespace ftcat {

/// Exact real algebraic number: an irreducible primitive integer polynomial
/// and an isolating interval. For degree one the interval collapses to the
/// rational root itself; otherwise the open interval (lo, hi) holds exactly
/// one root.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}
  explicit RealAlgebraic(const Rational& q);
  // Trusted constructor; the caller guarantees the invariants.
  RealAlgebraic(std::vector<Integer> minpoly, Rational lo, Rational hi);

  const std::vector<Integer>& minpoly() const { return minpoly_; }
  Poly minpoly_poly() const { return Poly::from_integers(minpoly_); }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  Rational rational_value() const;

  // Halves the isolating interval until its width is at most w.
  RealAlgebraic refined(const Rational& w) const;
  void bisect();
  Interval enclosure() const { return {lo_, hi_}; }

  double approx() const;

 private:
  std::vector<Integer> minpoly_;
  Rational lo_, hi_;
};

enum class Order { Less, Equal, Greater };

Order cmp(RealAlgebraic a, RealAlgebraic b);
inline bool equal(const RealAlgebraic& a, const RealAlgebraic& b) { return cmp(a, b) == Order::Equal; }

RealAlgebraic real_add(RealAlgebraic a, RealAlgebraic b);
RealAlgebraic real_mul(RealAlgebraic a, RealAlgebraic b);
RealAlgebraic real_neg(const RealAlgebraic& a);

/// The unique root of the squarefree polynomial s inside the closed
/// interval I, which the caller guarantees to hold exactly one root.
RealAlgebraic root_in(const Poly& s, const Interval& I);

// Number of roots of squarefree s in the closed interval.
int count_closed(const SturmSequence& st, const Poly& s, const Interval& I);

/// Largest real eigenvalue of a square nonnegative integer matrix, isolated
/// by Sturm bisection of the characteristic polynomial.
RealAlgebraic perron_root(const IntMatrix& m);

// Decimal rendering correctly rounded to the given number of digits.
std::string to_decimal(RealAlgebraic a, int digits);
// "minpoly; [lo, hi]; ≈ d.ddd"
std::string render(const RealAlgebraic& a, int digits = 4);

struct NumberField {
  RealAlgebraic generator;
  Poly modulus;  // monic minimal polynomial of the generator
  int degree() const { return modulus.degree(); }
};
using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const RealAlgebraic& generator);
FieldPtr rational_field();
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of Q(lambda) in the power basis of the generator.
class NFElement {
 public:
  NFElement() = default;
  NFElement(FieldPtr f, std::vector<Rational> coords);
  static NFElement rational(FieldPtr f, const Rational& q);
  static NFElement generator(FieldPtr f);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  Poly as_poly() const { return Poly(coords_); }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a);
  friend bool operator==(const NFElement& a, const NFElement& b);
  NFElement& operator+=(const NFElement& b) { return *this = *this + b; }
  NFElement& operator*=(const NFElement& b) { return *this = *this * b; }

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

enum class NfOp { Add, Sub, Mul, Div };
NFElement nf_arith(const NFElement& a, const NFElement& b, NfOp op);

// Primitive integer minimal polynomial over Q.
std::vector<Integer> minimal_polynomial(const NFElement& a);
bool is_algebraic_integer(const NFElement& a);
// Multiplication-by-a matrix on the power basis.
QMatrix mult_matrix(const NFElement& a);

RealAlgebraic to_real(const NFElement& a);
int sign(const NFElement& a);
Interval enclosure(const NFElement& a);
inline std::string render(const NFElement& a, int digits = 4) { return render(to_real(a), digits); }

/// Kernel vector of M - eigval normalized to 1 at normalize_index.
std::vector<NFElement> field_solve_eigvector(const QMatrix& m, const NFElement& eigval, int normalize_index);
std::vector<NFElement> field_solve_eigvector(const IntMatrix& m, const NFElement& eigval, int normalize_index);

}  // namespace ftcat
