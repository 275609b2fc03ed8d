#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftcat/poly.hpp"
#include "ftcat/report.hpp"

namespace ftcat {

using GrVector = std::vector<std::int64_t>;

enum class Side { Left, Right };

/// Based Z+-ring: labelled basis, fusion coefficients N(i,j,k) = [L_i L_j : L_k]
/// and the duality i -> i*. The unit is normally one basis element; a formal
/// direct sum of rings has a unit spread over several.
class BasedRing {
 public:
  BasedRing() = default;
  BasedRing(std::vector<std::string> labels, std::vector<int> unit, std::vector<std::int64_t> fusion,
            std::vector<int> star);
  // Zero fusion, identity star, unit at index 0.
  static BasedRing empty(std::vector<std::string> labels);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& unit() const { return unit_; }
  int unit_index() const;
  bool single_unit() const { return unit_.size() == 1; }

  std::int64_t N(int i, int j, int k) const { return fusion_[idx(i, j, k)]; }
  std::int64_t& N(int i, int j, int k) { return fusion_[idx(i, j, k)]; }
  const std::vector<std::int64_t>& fusion() const { return fusion_; }

  int star(int i) const { return star_[static_cast<std::size_t>(i)]; }
  int star_inv(int i) const;
  const std::vector<int>& star_map() const { return star_; }
  std::vector<int>& star_map() { return star_; }
  std::vector<int>& unit_mut() { return unit_; }

  int index_of(const std::string& label) const;
  GrVector basis(int i) const;
  GrVector unit_vector() const;

 private:
  std::size_t idx(int i, int j, int k) const {
    const auto n = labels_.size();
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n + static_cast<std::size_t>(k);
  }
  std::vector<std::string> labels_;
  std::vector<int> unit_;
  std::vector<std::int64_t> fusion_;
  std::vector<int> star_;
};

Report validate_ring(const BasedRing& r, bool strict = false);

// left: M[k][j] = coefficient of L_k in x L_j; right: in L_j x.
IntMatrix mult_matrix(const BasedRing& r, const GrVector& x, Side side);
// Sum of the left multiplication matrices of all basis elements.
IntMatrix total_matrix(const BasedRing& r);
bool is_transitive(const BasedRing& r);
GrVector gr_mul(const BasedRing& r, const GrVector& x, const GrVector& y);
// Applies the duality to coefficients: (x*)_{i*} = x_i.
GrVector star_vector(const BasedRing& r, const GrVector& x);

// Basis elements b with b b* = 1 exactly.
std::vector<int> invertibles(const BasedRing& r);

// Strongly connected support of a square nonnegative matrix.
bool is_irreducible(const IntMatrix& m);

}  // namespace ftcat
