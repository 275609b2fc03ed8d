#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ftcat/poly.hpp"

namespace ftcat {

// Coordinates in the field's basis over its prime field: one rational for Q
// and GF(p) (an integer in [0, p) there), phi(l) rationals for Q(zeta_l).
using Scalar = std::vector<Rational>;
using SVector = std::vector<Scalar>;
using SMatrix = std::vector<SVector>;

/// Q, GF(p) (optionally with a chosen primitive l-th root of unity) or the
/// cyclotomic field Q(zeta_l) as polynomials modulo Phi_l.
class ExactField {
 public:
  enum class Kind { Rationals, Prime, Cyclotomic };

  ExactField();
  static ExactField rationals();
  // root_order > 1 picks a primitive root of unity of that order; it must divide p - 1.
  static ExactField prime(int p, int root_order = 1);
  static ExactField cyclotomic(int l);
  // "Q", "GF(7)", "GF(7,3)" or "Q(zeta_4)".
  static ExactField parse_name(const std::string& name);

  Kind kind() const;
  int characteristic() const;
  // Order of the distinguished root of unity zeta (1 when there is none).
  int root_order() const;
  int degree() const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_rational(const Rational& q) const;
  Scalar zeta() const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Throws DivisionByZero.
  Scalar inv(const Scalar& a) const;
  Scalar pow(const Scalar& a, long e) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;
  // Sums of terms like "3/2", "-z", "2*z^3", "z^-1".
  Scalar parse(const std::string& text) const;

  friend bool operator==(const ExactField& a, const ExactField& b);

 private:
  struct Data;
  explicit ExactField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

SMatrix identity_matrix(const ExactField& f, int n);
SMatrix zero_matrix(const ExactField& f, int rows, int cols);
SMatrix matmul(const ExactField& f, const SMatrix& a, const SMatrix& b);
SVector matvec(const ExactField& f, const SMatrix& a, const SVector& v);
SMatrix transpose(const SMatrix& m);
bool is_zero_vector(const ExactField& f, const SVector& v);

int rank(const ExactField& f, SMatrix m);
// Basis of {x : m x = 0}.
std::vector<SVector> nullspace(const ExactField& f, SMatrix m, int cols);
std::optional<SVector> solve(const ExactField& f, const SMatrix& m, const SVector& b);

/// Incrementally built row-echelon basis of a subspace of F^n.
class Echelon {
 public:
  Echelon(ExactField f, int n) : f_(std::move(f)), n_(n) {}
  // Reduces v against the basis; returns the residue.
  SVector reduce(SVector v) const;
  // Adds v when independent; returns whether it was.
  bool insert(const SVector& v);
  bool contains(const SVector& v) const { return is_zero_vector(f_, reduce(v)); }
  int size() const { return static_cast<int>(rows_.size()); }
  // Original (unreduced) vectors in insertion order.
  const std::vector<SVector>& inserted() const { return inserted_; }

 private:
  ExactField f_;
  int n_;
  std::vector<SVector> rows_;
  std::vector<int> pivots_;
  std::vector<SVector> inserted_;
};

/// Reduction of the field onto GF(p) for fast probabilistic-free lower
/// bounds: ranks over GF(p) never exceed ranks over the field itself.
class ModPImage {
 public:
  // Picks a prime p = 1 mod l below 2^31 whose reduction is defined on every
  // scalar passed to map(); retry with the next seed when map() fails.
  explicit ModPImage(const ExactField& f, int seed = 0);
  std::uint64_t p() const { return p_; }
  // nullopt when a denominator vanishes mod p.
  std::optional<std::uint64_t> map(const Scalar& s) const;

 private:
  ExactField f_;
  std::uint64_t p_ = 0;
  std::uint64_t root_ = 1;
};

/// Row-echelon basis over GF(p) with 64-bit entries.
class EchelonModP {
 public:
  EchelonModP(std::uint64_t p, int n) : p_(p), n_(n) {}
  bool insert(std::vector<std::uint64_t> v);
  int size() const { return static_cast<int>(rows_.size()); }

 private:
  std::uint64_t p_;
  int n_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<int> pivots_;
};

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p);

}  // namespace ftcat
