#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ftcat/algnum.hpp"
#include "ftcat/ring.hpp"

namespace ftcat {

/// Grothendieck-level shadow of a finite tensor category: fusion ring,
/// Cartan matrix C[i][j] = [P_i : L_j], ground characteristic and optional
/// socle permutation (socle of P_i is L_s(i)).
struct TensorCatData {
  BasedRing ring;
  IntMatrix cartan;
  int characteristic = 0;
  std::optional<std::vector<int>> socle;
  std::optional<bool> pivotal_trace_exists;
};

Report validate_category(const TensorCatData& c);
bool is_semisimple(const TensorCatData& c);

struct FpDims {
  RealAlgebraic generator;  // Perron root of the total multiplication matrix
  FieldPtr field;
  std::vector<NFElement> d;
};

using KVector = std::vector<std::int64_t>;
using NFVector = std::vector<NFElement>;

/// Category data with the FP dimensions computed once on first use.
/// Copies share the cache.
class TensorCategory {
 public:
  explicit TensorCategory(TensorCatData data);
  const TensorCatData& data() const;
  const BasedRing& ring() const { return data().ring; }
  const IntMatrix& cartan() const { return data().cartan; }
  int rank() const { return ring().rank(); }
  // Throws NotTransitive or EigenspaceDimensionNotOne.
  const FpDims& fpdims() const;

 private:
  struct State;
  std::shared_ptr<State> s_;
};

NFElement fpdim_object(const TensorCategory& c, const GrVector& x);
NFElement fpdim_projective(const TensorCategory& c, int i);
NFElement fpdim_category(const TensorCategory& c);
// Class of P_i in Gr: row i of the Cartan matrix.
GrVector projective_class(const TensorCatData& c, int i);
NFElement fpdim_kvector(const TensorCategory& c, const KVector& v);

KVector proj_tensor(const TensorCatData& c, int i, const GrVector& z, Side side);
// Right-sided formula; throws InconsistentData when the left-sided one differs.
KVector proj_fusion(const TensorCatData& c, int i, int j);
KVector proj_fusion_left(const TensorCatData& c, int i, int j);

// Coefficients d_i on P_i, after checking X R = R X = d(X) R for every simple.
NFVector regular_object(const TensorCategory& c);

struct Distinguished {
  int rho = 0;
  std::vector<int> D;
  friend bool operator==(const Distinguished&, const Distinguished&) = default;
};

// Every self-consistent (rho, D); with a socle this is at most one pair,
// or InconsistentData when the socle fails the checks.
std::vector<Distinguished> distinguished_candidates(const TensorCategory& c);
// Throws Ambiguous when several candidates survive.
Distinguished distinguished(const TensorCategory& c);
bool is_unimodular(const TensorCategory& c);
// Runs every check on a given pair; empty report means it is consistent.
Report check_distinguished(const TensorCategory& c, const Distinguished& d);

struct CartanRank {
  int size = 0;
  int rank_q = 0;
  std::optional<int> rank_p;
  int ground_rank() const { return rank_p ? *rank_p : rank_q; }
  Report findings;
};
CartanRank cartan_rank(const TensorCatData& c);

bool integrality_flag(const TensorCategory& c);

struct DimensionInequality {
  NFElement slack;  // d+(C) - N d+(P_unit)
  int sign = 0;
  Report findings;
};
DimensionInequality dimension_inequality(const TensorCategory& c);

TensorCatData deligne_product(const TensorCatData& a, const TensorCatData& b);
// d+(a x b) == d+(a) d+(b), compared as real algebraic numbers.
bool deligne_multiplicative(const TensorCategory& a, const TensorCategory& b, const TensorCategory& ab);

// Rank of an integer matrix over Q, or over F_p when p > 0.
int matrix_rank(const IntMatrix& m, int p = 0);

}  // namespace ftcat
