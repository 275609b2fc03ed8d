#include "ftcat/ring.hpp"

#include <algorithm>
#include <numeric>

#include "ftcat/error.hpp"

namespace ftcat {

BasedRing::BasedRing(std::vector<std::string> labels, std::vector<int> unit, std::vector<std::int64_t> fusion,
                     std::vector<int> star)
    : labels_(std::move(labels)), unit_(std::move(unit)), fusion_(std::move(fusion)), star_(std::move(star)) {
  const auto n = labels_.size();
  if (fusion_.size() != n * n * n) fail(ErrorCode::LengthMismatch, "fusion tensor has wrong size");
  if (star_.size() != n) fail(ErrorCode::LengthMismatch, "star map has wrong size");
  if (unit_.empty()) fail(ErrorCode::InvalidInput, "ring has no unit");
  for (int u : unit_)
    if (u < 0 || static_cast<std::size_t>(u) >= n) fail(ErrorCode::IndexOutOfRange, "unit index out of range");
  for (int s : star_)
    if (s < 0 || static_cast<std::size_t>(s) >= n) fail(ErrorCode::IndexOutOfRange, "star index out of range");
}

BasedRing BasedRing::empty(std::vector<std::string> labels) {
  const auto n = labels.size();
  std::vector<int> star(n);
  std::iota(star.begin(), star.end(), 0);
  return BasedRing(std::move(labels), {0}, std::vector<std::int64_t>(n * n * n, 0), std::move(star));
}

int BasedRing::unit_index() const {
  if (unit_.size() != 1) fail(ErrorCode::NotTransitive, "unit object is not simple");
  return unit_[0];
}

int BasedRing::star_inv(int i) const {
  for (int j = 0; j < rank(); ++j)
    if (star(j) == i) return j;
  fail(ErrorCode::InconsistentData, "star is not a bijection");
}

int BasedRing::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) fail(ErrorCode::InvalidInput, "unknown label '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

GrVector BasedRing::basis(int i) const {
  if (i < 0 || i >= rank()) fail(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i));
  GrVector v(labels_.size(), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

GrVector BasedRing::unit_vector() const {
  GrVector v(labels_.size(), 0);
  for (int u : unit_) v[static_cast<std::size_t>(u)] += 1;
  return v;
}

Report validate_ring(const BasedRing& r, bool strict) {
  Report rep;
  const int n = r.rank();
  auto add = [&](const char* code, std::string msg, std::vector<int> w) {
    rep.push_back({"error", code, std::move(msg), std::move(w)});
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (r.N(i, j, k) < 0) add("negative_entry", "negative fusion coefficient", {i, j, k});

  {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) seen[static_cast<std::size_t>(r.star(i))]++;
    for (int i = 0; i < n; ++i)
      if (seen[static_cast<std::size_t>(i)] != 1) add("star_bijection", "star is not a bijection", {i});
    std::vector<std::string> sorted = r.labels();
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) add("duplicate_label", "labels repeat", {});
  }
  if (has_code(rep, "star_bijection")) return rep;

  for (int u : r.unit()) {
    if (std::find(r.unit().begin(), r.unit().end(), r.star(u)) == r.unit().end())
      add("star_unit", "star does not fix the unit", {u});
  }

  const GrVector e = r.unit_vector();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::int64_t left = 0, right = 0;
      for (int u = 0; u < n; ++u) {
        left += e[static_cast<std::size_t>(u)] * r.N(u, j, k);
        right += e[static_cast<std::size_t>(u)] * r.N(j, u, k);
      }
      const std::int64_t want = j == k ? 1 : 0;
      if (left != want) add("unit_law", "left unit law fails", {j, k});
      if (right != want) add("unit_law", "right unit law fails", {j, k});
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          std::int64_t a = 0, b = 0;
          for (int m = 0; m < n; ++m) {
            a += r.N(i, j, m) * r.N(m, k, l);
            b += r.N(j, k, m) * r.N(i, m, l);
          }
          if (a != b) add("associativity", "(L_i L_j) L_k and L_i (L_j L_k) differ at L_l", {i, j, k, l});
        }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (r.N(i, j, k) != r.N(r.star(j), r.star(i), r.star(k)))
          add("anti_automorphism", "N(i,j,k) differs from N(j*,i*,k*)", {i, j, k});

  for (int i = 0; i < n; ++i) {
    std::int64_t c = 0;
    for (int u : r.unit()) c += r.N(i, r.star(i), u);
    if (c < 1) add("coevaluation", "unit does not occur in L_i L_i*", {i});
  }
  if (strict) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t c = 0;
        for (int u : r.unit()) c += r.N(i, j, u);
        if (c != (j == r.star(i) ? 1 : 0)) add("strict_duality", "[L_i L_j : 1] differs from delta(j, i*)", {i, j});
      }
  }
  sort_findings(rep);
  return rep;
}

IntMatrix mult_matrix(const BasedRing& r, const GrVector& x, Side side) {
  const int n = r.rank();
  if (static_cast<int>(x.size()) != n) fail(ErrorCode::LengthMismatch, "vector length differs from ring rank");
  IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    const std::int64_t c = x[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] += c * (side == Side::Left ? r.N(i, j, k) : r.N(j, i, k));
  }
  return m;
}

IntMatrix total_matrix(const BasedRing& r) {
  return mult_matrix(r, GrVector(static_cast<std::size_t>(r.rank()), 1), Side::Left);
}

bool is_irreducible(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  auto reach = [&](bool transpose) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < n; ++b) {
        const auto w = transpose ? m[b][a] : m[a][b];
        if (w > 0 && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return reach(false) && reach(true);
}

bool is_transitive(const BasedRing& r) { return is_irreducible(total_matrix(r)); }

GrVector gr_mul(const BasedRing& r, const GrVector& x, const GrVector& y) {
  const int n = r.rank();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    fail(ErrorCode::LengthMismatch, "vector length differs from ring rank");
  GrVector z(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j) {
      const std::int64_t c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] += c * r.N(i, j, k);
    }
  }
  return z;
}

GrVector star_vector(const BasedRing& r, const GrVector& x) {
  if (static_cast<int>(x.size()) != r.rank()) fail(ErrorCode::LengthMismatch, "vector length differs from ring rank");
  GrVector y(x.size(), 0);
  for (int i = 0; i < r.rank(); ++i) y[static_cast<std::size_t>(r.star(i))] = x[static_cast<std::size_t>(i)];
  return y;
}

std::vector<int> invertibles(const BasedRing& r) {
  std::vector<int> out;
  const GrVector e = r.unit_vector();
  for (int b = 0; b < r.rank(); ++b)
    if (gr_mul(r, r.basis(b), r.basis(r.star(b))) == e && gr_mul(r, r.basis(r.star(b)), r.basis(b)) == e)
      out.push_back(b);
  return out;
}

}  // namespace ftcat
