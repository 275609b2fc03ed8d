#include "ftcat/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ftcat/error.hpp"

namespace ftcat {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

IntMatrix identity(int n) {
  IntMatrix m(z(n), std::vector<std::int64_t>(z(n), 0));
  for (int i = 0; i < n; ++i) m[z(i)][z(i)] = 1;
  return m;
}

std::vector<int> iota(int n) {
  std::vector<int> v(z(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int parse_int(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 6)
    fail(ErrorCode::BadParameter, "bad " + what + " '" + s + "'");
  return std::stoi(s);
}

}  // namespace

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

BasedRing group_ring(const GroupSpec& g) {
  if (!g.abelian()) fail(ErrorCode::UnsupportedGroup, "group ring needs an abelian group");
  const AbelianGroup a(g.factors);
  const int n = a.order();
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) labels.push_back(a.label(x));
  std::vector<int> star(z(n));
  for (int x = 0; x < n; ++x) star[z(x)] = a.neg(x);
  std::vector<std::int64_t> fusion(z(n) * z(n) * z(n), 0);
  BasedRing r(std::move(labels), {0}, std::move(fusion), std::move(star));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.N(x, y, a.add(x, y)) = 1;
  return r;
}

TensorCatData build_taft(int l) {
  if (l < 2) fail(ErrorCode::BadParameter, "Taft algebra needs l >= 2");
  TensorCatData c;
  c.ring = group_ring(GroupSpec{{l}, {}});
  c.cartan.assign(z(l), std::vector<std::int64_t>(z(l), 1));
  c.characteristic = 0;
  std::vector<int> s(z(l));
  for (int i = 0; i < l; ++i) s[z(i)] = (i + l - 1) % l;
  c.socle = s;
  c.pivotal_trace_exists = true;
  return c;
}

TensorCatData build_modular_cyclic(int p, int n) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorCode::BadParameter, "exponent must be at least 1");
  std::int64_t pn = 1;
  for (int i = 0; i < n; ++i) {
    pn *= p;
    if (pn > (std::int64_t{1} << 40)) fail(ErrorCode::BadParameter, "group order too large");
  }
  TensorCatData c;
  c.ring = BasedRing({"1"}, {0}, {1}, {0});
  c.cartan = {{pn}};
  c.characteristic = p;
  c.socle = std::vector<int>{0};
  c.pivotal_trace_exists = true;
  return c;
}

TensorCatData build_pointed(const GroupSpec& g, int characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) fail(ErrorCode::NotPrime, "characteristic must be prime");
  TensorCatData c;
  c.ring = group_ring(g);
  const int n = c.ring.rank();
  c.cartan = identity(n);
  c.characteristic = characteristic;
  c.socle = iota(n);
  c.pivotal_trace_exists = true;
  return c;
}

TensorCatData build_group_semisimple(const GroupSpec& g) {
  if (g.abelian()) return build_pointed(g, 0);
  if (g.named != "S3") fail(ErrorCode::UnsupportedGroup, "no stored table for " + g.named);
  TensorCatData c;
  BasedRing r = BasedRing::empty({"1", "sgn", "V"});
  const int one = 0, sgn = 1, v = 2;
  for (int x = 0; x < 3; ++x) {
    r.N(one, x, x) = 1;
    r.N(x, one, x) = 1;
  }
  r.N(sgn, sgn, one) = 1;
  r.N(sgn, v, v) = 1;
  r.N(v, sgn, v) = 1;
  r.N(v, v, one) = 1;
  r.N(v, v, sgn) = 1;
  r.N(v, v, v) = 1;
  c.ring = std::move(r);
  c.cartan = identity(3);
  c.socle = iota(3);
  c.pivotal_trace_exists = true;
  return c;
}

TensorCatData build_fibonacci() {
  TensorCatData c;
  BasedRing r = BasedRing::empty({"1", "X"});
  r.N(0, 0, 0) = 1;
  r.N(0, 1, 1) = 1;
  r.N(1, 0, 1) = 1;
  r.N(1, 1, 0) = 1;
  r.N(1, 1, 1) = 1;
  c.ring = std::move(r);
  c.cartan = identity(2);
  c.socle = iota(2);
  c.pivotal_trace_exists = true;
  return c;
}

TensorCatData build_vec() {
  TensorCatData c;
  c.ring = BasedRing({"1"}, {0}, {1}, {0});
  c.cartan = {{1}};
  c.socle = std::vector<int>{0};
  c.pivotal_trace_exists = true;
  return c;
}

BasedRing direct_sum(const BasedRing& a, const BasedRing& b) {
  const int na = a.rank(), nb = b.rank(), n = na + nb;
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<int> unit = a.unit();
  for (int u : b.unit()) unit.push_back(u + na);
  std::vector<int> star;
  for (int i = 0; i < na; ++i) star.push_back(a.star(i));
  for (int i = 0; i < nb; ++i) star.push_back(b.star(i) + na);
  BasedRing r(std::move(labels), std::move(unit), std::vector<std::int64_t>(z(n) * z(n) * z(n), 0), std::move(star));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < na; ++k) r.N(i, j, k) = a.N(i, j, k);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nb; ++k) r.N(i + na, j + na, k + na) = b.N(i, j, k);
  return r;
}

std::vector<BasedRing> decompose_components(const BasedRing& r) {
  const int n = r.rank();
  std::vector<int> parent(z(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[z(x)] != x) x = parent[z(x)] = parent[z(parent[z(x)])];
    return x;
  };
  auto unite = [&](int a, int b) { parent[z(find(a))] = find(b); };
  for (int i = 0; i < n; ++i) {
    unite(i, r.star(i));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (r.N(i, j, k) > 0) {
          unite(i, k);
          unite(j, k);
        }
  }
  std::vector<int> comp(z(n), -1);
  std::map<int, int> root_id;
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (!root_id.count(root)) root_id[root] = ncomp++;
    comp[z(i)] = root_id[root];
  }
  std::vector<BasedRing> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (comp[z(i)] == c) members.push_back(i);
    std::map<int, int> pos;
    for (std::size_t t = 0; t < members.size(); ++t) pos[members[t]] = static_cast<int>(t);
    const int m = static_cast<int>(members.size());
    std::vector<std::string> labels;
    std::vector<int> star;
    std::vector<int> unit;
    for (int i : members) {
      labels.push_back(r.labels()[z(i)]);
      star.push_back(pos.at(r.star(i)));
    }
    for (int u : r.unit())
      if (pos.count(u)) unit.push_back(pos.at(u));
    if (unit.empty()) unit.push_back(0);
    BasedRing sub(std::move(labels), std::move(unit), std::vector<std::int64_t>(z(m) * z(m) * z(m), 0), std::move(star));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) sub.N(i, j, k) = r.N(members[z(i)], members[z(j)], members[z(k)]);
    out.push_back(std::move(sub));
  }
  return out;
}

RepGCount count_repG_module_cats(const GroupSpec& g, int characteristic) {
  if (!g.abelian()) fail(ErrorCode::UnsupportedGroup, "module category count needs an abelian group");
  if (characteristic != 0 && !is_prime(characteristic)) fail(ErrorCode::NotPrime, "characteristic must be prime");
  const AbelianGroup a(g.factors);
  RepGCount out;
  for (const auto& h : a.subgroups()) {
    const long c = wedge_square_order(a, h, characteristic);
    std::string desc = "{";
    for (std::size_t i = 0; i < h.size(); ++i) desc += (i ? "," : "") + a.label(h[i]);
    desc += "}";
    out.items.emplace_back(desc, c);
    out.total += c;
  }
  return out;
}

std::vector<CensusEntry> taft_module_census(int l) {
  if (l < 2) fail(ErrorCode::BadParameter, "Taft algebra needs l >= 2");
  std::vector<CensusEntry> out;
  for (int d : divisors(l)) {
    out.push_back({"nonsemisimple", d, 0});
    out.push_back({"semisimple family", d, 1});
  }
  return out;
}

bool is_catalog_name(const std::string& name) {
  static const char* prefixes[] = {"taft:", "modular-cyclic:", "group:", "pointed:"};
  if (name == "fibonacci" || name == "vec") return true;
  for (const char* p : prefixes)
    if (name.rfind(p, 0) == 0) return true;
  return false;
}

TensorCatData build_named(const std::string& name) {
  if (name == "fibonacci") return build_fibonacci();
  if (name == "vec") return build_vec();
  auto arg = [&](const std::string& prefix) { return name.substr(prefix.size()); };
  if (name.rfind("taft:", 0) == 0) return build_taft(parse_int(arg("taft:"), "Taft parameter"));
  if (name.rfind("modular-cyclic:", 0) == 0) {
    const std::string a = arg("modular-cyclic:");
    const auto caret = a.find('^');
    if (caret == std::string::npos) return build_modular_cyclic(parse_int(a, "prime"), 1);
    return build_modular_cyclic(parse_int(a.substr(0, caret), "prime"), parse_int(a.substr(caret + 1), "exponent"));
  }
  if (name.rfind("group:", 0) == 0) return build_group_semisimple(parse_group(arg("group:")));
  if (name.rfind("pointed:", 0) == 0) {
    const std::string a = arg("pointed:");
    const auto colon = a.find(':');
    if (colon == std::string::npos) return build_pointed(parse_group(a), 0);
    return build_pointed(parse_group(a.substr(0, colon)), parse_int(a.substr(colon + 1), "characteristic"));
  }
  fail(ErrorCode::InvalidInput, "unknown catalog name '" + name + "'");
}

}  // namespace ftcat
