#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftcat/field.hpp"
#include "ftcat/report.hpp"

namespace ftcat {

// Operator matrices act on coordinate columns: m[i][j] is the e_i
// coefficient of op(e_j).
struct GroupAction {
  std::string name;
  SMatrix matrix;
  int order = 1;
};

// Twisted derivation: d(ab) = d(a) b + t(a) d(b) where t is the group action
// with index `twist`, or the identity when twist < 0.
struct Derivation {
  std::string name;
  SMatrix matrix;
  int twist = -1;
  std::optional<int> nilpotence;
};

/// Finite-dimensional associative algebra with a group acting by
/// automorphisms and a family of twisted derivations.
struct EquivariantAlgebra {
  ExactField field;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<Scalar> mult;  // e_i e_j = sum_k mult[(i*dim+j)*dim+k] e_k
  SVector unit;
  std::vector<GroupAction> actions;
  std::vector<Derivation> derivations;
  // d_v o g = sum_w compat[g][v][w] g o d_w; empty when undeclared.
  std::vector<SMatrix> compat;
  // d_v d_w = -d_w d_v for all v, w (so d_v^2 = 0).
  bool anticommuting = false;
  std::optional<int> parity;  // index of the parity automorphism in actions
  std::optional<int> filtration_bound;

  const Scalar& c(int i, int j, int k) const {
    return mult[(static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)) *
                    static_cast<std::size_t>(dim) +
                static_cast<std::size_t>(k)];
  }
  SVector multiply(const SVector& a, const SVector& b) const;
  SVector basis_vector(int i) const;
  int index_of(const std::string& label) const;
  // Right multiplication by b as an operator.
  SMatrix right_mult(const SVector& b) const;
  SMatrix left_mult(const SVector& a) const;
};

Report validate_algebra(const EquivariantAlgebra& a);

/// Words over named generators; each rule rewrites an occurrence of `lhs`
/// into a linear combination of words. Normal words span the algebra.
struct Term {
  Scalar coeff;
  std::vector<int> word;
};
struct Rule {
  std::vector<int> lhs;
  std::vector<Term> rhs;
};
struct ActionSpec {
  std::string name;
  std::vector<std::vector<Term>> images;  // one per generator
  int order = 1;
};
struct DerivationSpec {
  std::string name;
  std::vector<std::vector<Term>> images;
  int twist = -1;
  std::optional<int> nilpotence;
};
struct Presentation {
  ExactField field;
  std::vector<std::string> generators;
  std::vector<Rule> rules;
  std::vector<ActionSpec> actions;
  std::vector<DerivationSpec> derivations;
  std::vector<SMatrix> compat;
  bool anticommuting = false;
  std::optional<int> parity;
  std::optional<int> filtration_bound;
  int dimension_bound = 64;
};

// Throws DimensionOverflow or InconsistentRelations.
EquivariantAlgebra build_from_presentation(const Presentation& p);
// Splits "cyy" into generator indices, longest generator name first.
std::vector<int> parse_word(const std::vector<std::string>& generators, const std::string& text);

struct SimpleResult {
  bool simple = false;
  int closure_dim = 0;
  std::optional<std::vector<SVector>> witness;
  std::string message;
};

// Burnside test on right multiplications, group actions and derivations.
SimpleResult is_simple_from_right(const EquivariantAlgebra& a);
// Same with an explicit operator set (used for restrictions).
SimpleResult burnside_closure(const ExactField& f, int n, const std::vector<SMatrix>& ops);

struct Filtration {
  std::vector<std::vector<SVector>> levels;  // bases of A_0, A_1, ...
  std::vector<int> dims;
  Report findings;
  std::optional<bool> a0_simple;
};
Filtration compute_filtration(const EquivariantAlgebra& a);

// Throws CharacteristicTooSmall when 0 < p <= dim.
bool semisimplicity_test(const EquivariantAlgebra& a);

// Subalgebra spanned by the given vectors, with the group actions restricted
// and no derivations. Throws InvalidInput when the span is not a subalgebra.
EquivariantAlgebra subalgebra(const EquivariantAlgebra& a, const std::vector<SVector>& span);

struct Fingerprint {
  int dim = 0;
  int center_dim = 0;
  int trace_rank = 0;
  // y^l for the unique y with d(y) = 1, g(y) = zeta^-1 y and z y = y g(z) on A_0.
  std::optional<Scalar> lambda;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const EquivariantAlgebra& a);

// The same algebra in a new basis: columns of `change` are the new basis
// vectors in old coordinates.
EquivariantAlgebra rebase(const EquivariantAlgebra& a, const SMatrix& change);

}  // namespace ftcat
