#pragma once

#include <string>
#include <vector>

namespace ftcat {

/// Finite group given by invariant factors n1 | n2 | ... (abelian) or by a
/// stored name such as "S3".
struct GroupSpec {
  std::vector<int> factors;
  std::string named;
  bool abelian() const { return named.empty(); }
  int order() const;
  std::string to_string() const;
};

// Accepts "2x2", "6", "Z2xZ2", "Z/2xZ/2", "S3".
GroupSpec parse_group(const std::string& text);

/// Elements of Z/n1 x ... x Z/nr as mixed-radix integers 0..order-1.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> factors);
  int order() const { return order_; }
  const std::vector<int>& factors() const { return factors_; }
  int add(int a, int b) const;
  int neg(int a) const;
  int element_order(int a) const;
  std::vector<int> digits(int a) const;
  int from_digits(const std::vector<int>& d) const;
  std::string label(int a) const;
  // Closure of a set of elements under addition.
  std::vector<int> generated(const std::vector<int>& gens) const;
  std::vector<std::vector<int>> subgroups() const;

 private:
  std::vector<int> factors_;
  int order_ = 1;
};

// |Lambda^2 H| for the abelian subgroup H (given as a sorted element list),
// with the p-part removed when p > 0.
long wedge_square_order(const AbelianGroup& g, const std::vector<int>& h, int p);

}  // namespace ftcat
