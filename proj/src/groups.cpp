#include "ftcat/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ftcat/error.hpp"

namespace ftcat {

int GroupSpec::order() const {
  if (named == "S3") return 6;
  int o = 1;
  for (int f : factors) o *= f;
  return o;
}

std::string GroupSpec::to_string() const {
  if (!named.empty()) return named;
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + std::to_string(factors[i]);
  return s.empty() ? "1" : s;
}

GroupSpec parse_group(const std::string& text) {
  GroupSpec g;
  if (text == "S3" || text == "s3") {
    g.named = "S3";
    return g;
  }
  if (text == "1") return g;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('x', pos);
    if (next == std::string::npos) next = text.size();
    std::string part = text.substr(pos, next - pos);
    if (!part.empty() && (part[0] == 'Z' || part[0] == 'C')) part.erase(0, 1);
    if (!part.empty() && part[0] == '/') part.erase(0, 1);
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
      fail(ErrorCode::UnsupportedGroup, "cannot parse group '" + text + "'");
    g.factors.push_back(std::stoi(part));
    pos = next + 1;
  }
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (g.factors[i] < 2) fail(ErrorCode::BadParameter, "group factors must be at least 2");
    if (i > 0 && g.factors[i] % g.factors[i - 1] != 0)
      fail(ErrorCode::BadParameter, "group factors must form a divisibility chain");
  }
  return g;
}

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int f : factors_) order_ *= f;
}

std::vector<int> AbelianGroup::digits(int a) const {
  std::vector<int> d;
  for (int f : factors_) {
    d.push_back(a % f);
    a /= f;
  }
  return d;
}

int AbelianGroup::from_digits(const std::vector<int>& d) const {
  int a = 0, mul = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    a += (((d[i] % factors_[i]) + factors_[i]) % factors_[i]) * mul;
    mul *= factors_[i];
  }
  return a;
}

int AbelianGroup::add(int a, int b) const {
  auto x = digits(a), y = digits(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return from_digits(x);
}

int AbelianGroup::neg(int a) const {
  auto x = digits(a);
  for (auto& v : x) v = -v;
  return from_digits(x);
}

int AbelianGroup::element_order(int a) const {
  int o = 1, x = a;
  while (x != 0) {
    x = add(x, a);
    ++o;
  }
  return o;
}

std::string AbelianGroup::label(int a) const {
  const auto d = digits(a);
  if (d.size() == 1) return std::to_string(d[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::vector<int> AbelianGroup::generated(const std::vector<int>& gens) const {
  std::set<int> h{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        const int y = add(x, g);
        if (h.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {h.begin(), h.end()};
}

std::vector<std::vector<int>> AbelianGroup::subgroups() const {
  std::set<std::vector<int>> seen{{0}};
  std::vector<std::vector<int>> queue{{0}};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto h = queue[q];
    for (int g = 0; g < order_; ++g) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      std::vector<int> gens = h;
      gens.push_back(g);
      auto k = generated(gens);
      if (seen.insert(k).second) queue.push_back(k);
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

long wedge_square_order(const AbelianGroup& g, const std::vector<int>& h, int p) {
  const int n = static_cast<int>(h.size());
  long result = 1;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (!prime) continue;
    // e_k = log_q |H[q^k]| = sum_i min(a_i, k); exponents recovered from jumps.
    std::vector<int> e{0};
    int qk = 1;
    while (true) {
      qk *= q;
      int count = 0;
      for (int x : h)
        if (qk % g.element_order(x) == 0) ++count;
      int lg = 0;
      for (int c = count; c > 1; c /= q) ++lg;
      e.push_back(lg);
      if (lg == e[e.size() - 2]) break;
    }
    // number of cyclic factors with exponent >= k is e_k - e_{k-1}
    std::vector<int> a;
    for (std::size_t k = 1; k < e.size(); ++k) {
      const int at_least_k = e[k] - e[k - 1];
      const int at_least_next = k + 1 < e.size() ? e[k + 1] - e[k] : 0;
      for (int t = 0; t < at_least_k - at_least_next; ++t) a.push_back(static_cast<int>(k));
    }
    if (q == p) continue;
    long exp = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) exp += std::min(a[i], a[j]);
    for (long t = 0; t < exp; ++t) result *= q;
  }
  return result;
}

}  // namespace ftcat
