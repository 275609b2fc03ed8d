#pragma once

#include <optional>
#include <vector>

#include "ftcat/tensorcat.hpp"

namespace ftcat {

/// Z+-module of rank m: one m x m nonnegative matrix per ring basis element,
/// R_i[b'][b] = multiplicity of b' in L_i b.
struct ZPlusModule {
  int rank = 0;
  std::vector<IntMatrix> action;
  friend bool operator==(const ZPlusModule&, const ZPlusModule&) = default;
};

// Left multiplication matrices of the ring on itself.
ZPlusModule regular_module(const BasedRing& r);

Report verify_module(const BasedRing& r, const ZPlusModule& m, bool duality = false);

struct EnumerateOptions {
  bool duality = true;
  int cap = 8;
  bool parallel = true;
};

// Irreducible modules of rank <= max_rank up to simultaneous basis
// permutation, in canonical form, sorted by (rank, canonical key).
std::vector<ZPlusModule> enumerate(const BasedRing& r, int max_rank, const EnumerateOptions& opt = {});
std::vector<ZPlusModule> enumerate(const BasedRing& r, int max_rank, bool duality);

// Lexicographically least relabeling of the basis.
ZPlusModule canonical_form(const ZPlusModule& m);
ZPlusModule permuted(const ZPlusModule& m, const std::vector<int>& perm);

bool census_match(const std::vector<ZPlusModule>& modules, std::vector<int> expected_ranks);

// Positive v with R_i v = d_i v for every i, solved exactly in the ring's
// Perron field; nullopt when no such vector exists.
std::optional<NFVector> module_fp_vector(const BasedRing& r, const ZPlusModule& m);

// FP dimensions of a transitive based ring.
FpDims ring_fpdims(const BasedRing& r);

}  // namespace ftcat
