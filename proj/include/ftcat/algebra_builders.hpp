#pragma once

#include <string>
#include <vector>

#include "ftcat/algebra.hpp"
#include "ftcat/groups.hpp"

namespace ftcat {

/// Finite group by multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  std::vector<int> generators;
  std::vector<std::string> labels;

  static FiniteGroup from_spec(const GroupSpec& g);
  int order() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int element_order(int a) const;
  std::vector<int> generated(const std::vector<int>& gens) const;
};

// Cocycle tables are indexed by positions in the subgroup's element list.
using CocycleTable = SMatrix;

// Throws CocycleInvalid when the 2-cocycle identity or normalization fails.
void check_cocycle(const ExactField& f, const FiniteGroup& g, const std::vector<int>& h, const CocycleTable& psi);

// The nontrivial class on Z/2 x Z/2: psi(a, b) = (-1)^(a_1 b_0).
CocycleTable standard_cocycle_2x2(const ExactField& f);
// X^a0 Z^a1, a projective representation for standard_cocycle_2x2.
std::vector<SMatrix> pauli_representation(const ExactField& f);

/// k[G/H] when psi is empty, otherwise Ind_H^G(End V) for the
/// psi-projective representation `rep` (one matrix per element of h).
/// G acts through its generators.
EquivariantAlgebra build_group_quotient(const ExactField& f, const GroupSpec& g, const std::vector<int>& h,
                                        const CocycleTable& psi = {}, const std::vector<SMatrix>& rep = {});

/// Super data over an abelian group: u has order at most 2, the group acts on
/// W through the sign character chi (one sign per invariant factor
/// generator) and chi(u) = -1 whenever W is nonzero. Y is spanned by the
/// first rows of `y` (coordinates in W) and carries the symmetric form B.
struct SuperData {
  GroupSpec group;
  int u = 0;
  std::vector<int> chi;
  std::vector<int> h;  // subgroup elements
  CocycleTable psi;    // empty means trivial
  std::vector<SMatrix> rep;  // empty means the trivial 1-dim representation
  int w_dim = 0;
  SMatrix y;  // rows: basis of Y inside W
  SMatrix b;
};

// k[H]_psi smash Cl(Y, B) with the parity and H actions and the inner odd
// derivations d_v = [v, -] for v in Y (zero off Y). Throws CharacteristicTwo,
// AsymmetricForm.
EquivariantAlgebra build_clifford_smash(const ExactField& f, const SuperData& s);

// Ind_{H^}^G(Ind_H^{H^}(End V) (x) Cl((W/Ker B)^*, B)) with H^ = <H, u>.
// Throws DimensionOverflow above max_dim.
EquivariantAlgebra supergroup_internal_hom(const ExactField& f, const SuperData& s, int max_dim = 64);

/// A(d, lambda): A_0 = k[Z/l / Z/d] and y with y^l = lambda. Throws BadDivisor.
EquivariantAlgebra build_taft_A(int l, int d, const Scalar& lambda, const ExactField& f);
EquivariantAlgebra build_taft_A(int l, int d, long lambda);
// d(y^m) = (1 + zeta^-1 + ... + zeta^(1-m)) y^(m-1) for 1 <= m < l.
Report verify_taft_derivative_powers(const EquivariantAlgebra& a, int l);

/// The Taft Hopf algebra H_l = <g, x | g^l = 1, x^l = 0, g x g^-1 = zeta x>
/// and its indecomposable projectives P_i = H e_i.
struct TaftProjectives {
  int dim = 0;
  std::vector<std::vector<int>> cartan;  // multiplicity of L_j in P_i
  std::vector<int> socle;                // character of the socle of P_i
  std::vector<int> projective_dims;
};
EquivariantAlgebra taft_hopf_algebra(int l);
TaftProjectives taft_projectives(int l);

}  // namespace ftcat
