#pragma once

// Independent reference computations used to derive expected values in the
// unit tests. None of these call into the library's algorithms.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;
using IMat = std::vector<std::vector<std::int64_t>>;

// Characteristic polynomial det(xI - M), low degree first, by the
// Faddeev-LeVerrier recursion.
QVec charpoly_leverrier(const QMat& m);
QMat to_q(const IMat& m);

// Value of a polynomial (low degree first) at a rational point.
mpq_class eval(const QVec& p, const mpq_class& x);

// Spectral radius by power iteration in long double on M + I (aperiodic).
long double spectral_radius(const IMat& m);

// Rank over Q and over F_p by plain Gaussian elimination.
int rank_q(QMat m);
int rank_mod_p(IMat m, std::int64_t p);

// sqrt(n) to within 2^-bits by integer bisection, as a rational interval.
std::pair<mpq_class, mpq_class> sqrt_interval(const mpq_class& n, int bits);

// Number of subgroups of Z/n1 x ... (rank <= 3) by brute force over generated subsets.
int count_subgroups_brute(const std::vector<int>& factors);

IMat random_nonneg(std::mt19937& rng, int n, int max_entry);

// Fusion data as a flat n^3 table N[(i*n+j)*n+k].
struct Fusion {
  int n = 0;
  std::vector<std::int64_t> N;
  std::vector<int> star;
  int unit = 0;
  std::int64_t at(int i, int j, int k) const { return N[static_cast<std::size_t>((i * n + j) * n + k)]; }
};

// Every based-ring axiom checked directly: nonnegativity, unit law, star an
// involutive bijection fixing the unit, associativity, N_ij^k = N_j*i*^k*,
// [L_i L_j : 1] = delta(j, i*).
bool based_ring_ok(const Fusion& f);

// Group ring of Z/n1 x ... in mixed radix (first factor fastest).
Fusion abelian_group_ring(const std::vector<int>& factors);

// Irreducible Z+-modules of the given rank with all entries <= bound, counted
// up to simultaneous basis permutation, by exhaustive search over every tuple
// of matrices. Only for tiny rings.
int count_nimreps_brute(const Fusion& f, int rank, int bound, bool duality);

// Dimension of the span of all products of the given rational operators,
// from words of length <= n^2 generated breadth first.
int operator_algebra_dim(const std::vector<QMat>& ops);

}  // namespace oracle
