#pragma once

#include <vector>

#include "ftcat/poly.hpp"

namespace ftcat {

// Largest degree accepted for the irreducible factorization of the part of a
// polynomial left after rational roots are stripped.
inline constexpr int kMaxFactorDegree = 12;

/// Irreducible factorization over Z of a squarefree polynomial. Rational
/// roots are found first by the rational root test; the remainder is split by
/// Cantor-Zassenhaus modulo a prime, Hensel lifting and exact recombination.
/// Factors are primitive with positive leading coefficient, sorted by degree.
/// Throws DegreeTooLarge when the non-linear remainder exceeds
/// kMaxFactorDegree.
std::vector<std::vector<Integer>> factor_squarefree(const Poly& squarefree);

// Rational roots of a nonzero polynomial, ascending.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace ftcat
