#pragma once

#include <string>
#include <vector>

#include "ftcat/groups.hpp"
#include "ftcat/tensorcat.hpp"

namespace ftcat {

// Representations of the Taft algebra H_l: characters of g, all-ones Cartan
// matrix, socle of P_i is L_{i-1}.
TensorCatData build_taft(int l);
TensorCatData build_modular_cyclic(int p, int n);
TensorCatData build_group_semisimple(const GroupSpec& g);
TensorCatData build_pointed(const GroupSpec& g, int characteristic = 0);
TensorCatData build_fibonacci();
TensorCatData build_vec();

// Group ring Z[G] of an abelian group with star = inverse.
BasedRing group_ring(const GroupSpec& g);
BasedRing direct_sum(const BasedRing& a, const BasedRing& b);
// Components of the fusion support graph; each keeps the unit summand it contains.
std::vector<BasedRing> decompose_components(const BasedRing& r);

struct RepGCount {
  long total = 0;
  std::vector<std::pair<std::string, long>> items;  // subgroup, |H^2(H, k*)|
};
RepGCount count_repG_module_cats(const GroupSpec& g, int characteristic);

struct CensusEntry {
  std::string description;
  int simple_count;
  int parameter_dimension;
};
std::vector<CensusEntry> taft_module_census(int l);

std::vector<int> divisors(int n);

// "taft:3", "modular-cyclic:2^2", "group:S3", "pointed:2x2", "fibonacci", "vec".
TensorCatData build_named(const std::string& name);
bool is_catalog_name(const std::string& name);

}  // namespace ftcat
