#include "ftcat/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "ftcat/error.hpp"

namespace ftcat {
namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

// ---------- arithmetic in F_p[x] ----------

struct PrimeField {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly sub(const PrimeField& F, ModPoly a, const ModPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

ModPoly add(const PrimeField& F, ModPoly a, const ModPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  trim(a);
  return a;
}

ModPoly mul(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> divmod(const PrimeField& F, ModPoly a, const ModPoly& b) {
  if (deg(a) < deg(b)) return {{}, a};
  const u64 inv = F.inv(b.back());
  ModPoly q(a.size() - b.size() + 1, 0);
  for (int i = deg(a); i >= deg(b); --i) {
    const u64 f = F.mul(a[static_cast<std::size_t>(i)], inv);
    q[static_cast<std::size_t>(i - deg(b))] = f;
    if (!f) continue;
    for (int j = 0; j <= deg(b); ++j) {
      auto& t = a[static_cast<std::size_t>(i - deg(b) + j)];
      t = F.sub(t, F.mul(f, b[static_cast<std::size_t>(j)]));
    }
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly mod(const PrimeField& F, const ModPoly& a, const ModPoly& b) { return divmod(F, a, b).second; }

ModPoly monic(const PrimeField& F, ModPoly a) {
  if (a.empty()) return a;
  const u64 inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

ModPoly gcd(const PrimeField& F, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> bezout(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(F, s0, mul(F, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(F, t0, mul(F, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = F.inv(r0.back());
  for (auto& c : s0) c = F.mul(c, inv);
  for (auto& c : t0) c = F.mul(c, inv);
  trim(s0);
  trim(t0);
  return {s0, t0};
}

ModPoly powmod(const PrimeField& F, ModPoly base, Integer e, const ModPoly& m) {
  ModPoly r{1};
  base = mod(F, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mod(F, mul(F, r, base), m);
    base = mod(F, mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

ModPoly derivative(const PrimeField& F, const ModPoly& a) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], i % F.p));
  trim(d);
  return d;
}

// Distinct-degree then equal-degree factorization of a monic squarefree
// polynomial over F_p (p odd).
std::vector<ModPoly> factor_mod_p(const PrimeField& F, ModPoly f, std::mt19937_64& rng) {
  std::vector<std::pair<int, ModPoly>> ddf;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = powmod(F, h, Integer(static_cast<unsigned long>(F.p)), f);
    ModPoly g = gcd(F, sub(F, h, x), f);
    if (deg(g) > 0) {
      ddf.emplace_back(i, g);
      f = divmod(F, f, g).first;
      h = mod(F, h, f);
    }
  }
  if (deg(f) > 0) ddf.emplace_back(deg(f), f);

  std::vector<ModPoly> out;
  for (auto& [d, g] : ddf) {
    std::vector<ModPoly> stack{g};
    while (!stack.empty()) {
      ModPoly cur = stack.back();
      stack.pop_back();
      if (deg(cur) == d) {
        out.push_back(monic(F, cur));
        continue;
      }
      // (p^d - 1) / 2
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      while (true) {
        ModPoly a(static_cast<std::size_t>(deg(cur)));
        for (auto& c : a) c = rng() % F.p;
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly b = sub(F, powmod(F, a, e, cur), ModPoly{1});
        ModPoly split = gcd(F, b, cur);
        if (deg(split) > 0 && deg(split) < deg(cur)) {
          stack.push_back(split);
          stack.push_back(divmod(F, cur, split).first);
          break;
        }
      }
    }
  }
  return out;
}

// ---------- integer polynomial helpers ----------

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod_pos(c, m);
  trim(a);
  return a;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    c = mod_pos(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ModPoly to_mod(const ZPoly& a, u64 p) {
  ModPoly r;
  const Integer P(static_cast<unsigned long>(p));
  for (const auto& c : a) r.push_back(mod_pos(c, P).get_ui());
  trim(r);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Exact division of a by a monic b over Z; returns false when inexact.
bool zdivide_monic(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  q.assign(a.size() - b.size() + 1, 0);
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    const Integer f = r[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

// Lifts f = g*h (mod p, g and h monic and coprime, f monic) to a
// factorization modulo p^k.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const ModPoly& g0, const ModPoly& h0, u64 p, int k) {
  const PrimeField F{p};
  auto [s, t] = bezout(F, g0, h0);
  ZPoly g = from_mod(g0), h = from_mod(h0);
  const Integer P(static_cast<unsigned long>(p));
  Integer pj = P;
  for (int j = 1; j < k; ++j) {
    ZPoly e = zsub(f, zmul(g, h));
    for (auto& c : e) c /= pj;  // exact: f = g*h mod p^j
    const ModPoly em = to_mod(e, p);
    // e = (e*s + q*h) g + tau h with tau = (e*t mod g).
    auto [q, tau] = divmod(F, mul(F, em, t), g0);
    ModPoly sigma = add(F, mul(F, em, s), mul(F, q, h0));
    sigma = mod(F, sigma, h0);
    ZPoly dg = from_mod(tau), dh = from_mod(sigma);
    for (auto& c : dg) c *= pj;
    for (auto& c : dh) c *= pj;
    if (dg.size() > g.size()) g.resize(dg.size(), 0);
    if (dh.size() > h.size()) h.resize(dh.size(), 0);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += dg[i];
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += dh[i];
    pj *= P;
    g = reduce(g, pj);
    h = reduce(h, pj);
  }
  return {g, h};
}

std::vector<ZPoly> hensel_lift_all(const ZPoly& f, std::vector<ModPoly> factors, u64 p, int k) {
  std::vector<ZPoly> out;
  ZPoly rest = f;
  const PrimeField F{p};
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  while (factors.size() > 1) {
    ModPoly g = factors.front();
    ModPoly h{1};
    for (std::size_t i = 1; i < factors.size(); ++i) h = mul(F, h, factors[i]);
    auto [G, H] = hensel_lift(rest, g, h, p, k);
    out.push_back(G);
    rest = H;
    factors.erase(factors.begin());
  }
  out.push_back(reduce(rest, pk));
  return out;
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors of a monic squarefree integer polynomial.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  // Pick the admissible prime giving the fewest modular factors.
  std::mt19937_64 rng(0x5eed);
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (u64 p = 3; tried < 6 && p < 10000; p += 2) {
    if (!is_prime_small(p)) continue;
    const PrimeField F{p};
    ModPoly fm = to_mod(f, p);
    if (deg(fm) != n) continue;
    if (deg(gcd(F, fm, derivative(F, fm))) != 0) continue;
    ++tried;
    auto facs = factor_mod_p(F, fm, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) fail(ErrorCode::InconsistentData, "no admissible prime for factorization");
  if (best.size() == 1) return {f};

  // Mignotte-style bound on coefficients of any factor: 2^n * ||f||_1.
  Integer norm = 0;
  for (const auto& c : f) norm += abs(c);
  Integer bound = norm << static_cast<unsigned long>(n);
  bound = 2 * bound + 1;
  int k = 1;
  Integer pk(static_cast<unsigned long>(best_p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(best_p);
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_lift_all(f, best, best_p, k);
  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<int> pick(lifted.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), 1);
    std::sort(pick.begin(), pick.end());
    do {
      ZPoly cand{1};
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (pick[i]) cand = reduce(zmul(cand, lifted[i]), pk);
      cand = symmetric(cand, pk);
      ZPoly q;
      if (!cand.empty() && cand.back() == 1 && zdivide_monic(rest, cand, q)) {
        result.push_back(cand);
        rest = q;
        std::vector<ZPoly> remaining;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (!pick[i]) remaining.push_back(lifted[i]);
        lifted = std::move(remaining);
        found = true;
        break;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  result.push_back(rest);
  return result;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, int>> primes;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    primes.emplace_back(d, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (auto& [q, e] : primes) {
    const std::size_t sz = out.size();
    Integer pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= q;
      for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Integer kDivisorLimit("1000000000000");

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> roots;
  if (p.is_zero()) return roots;
  std::vector<Integer> z = primitive_integer(p);
  std::size_t shift = 0;
  while (shift < z.size() && z[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  z.erase(z.begin(), z.begin() + static_cast<long>(shift));
  if (z.size() <= 1) return roots;
  if (abs(z.front()) > kDivisorLimit || abs(z.back()) > kDivisorLimit) {
    fail(ErrorCode::DegreeTooLarge, "coefficients too large for the rational root test");
  }
  const Poly q = Poly::from_integers(z);
  for (const auto& a : divisors(z.front()))
    for (const auto& b : divisors(z.back())) {
      if (gcd(a, b) != 1) continue;
      for (int sign : {1, -1}) {
        Rational r(sign * a, b);
        r.canonicalize();
        if (q.eval(r) == 0) roots.push_back(r);
      }
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<std::vector<Integer>> factor_squarefree(const Poly& squarefree) {
  std::vector<std::vector<Integer>> out;
  if (squarefree.degree() <= 0) return out;
  Poly rest = squarefree;
  for (const auto& r : rational_roots(squarefree)) {
    out.push_back(primitive_integer(Poly({-r, Rational(1)})));
    rest = exact_div(rest, Poly({-r, Rational(1)}));
  }
  if (rest.degree() > 0) {
    if (rest.degree() > kMaxFactorDegree) {
      fail(ErrorCode::DegreeTooLarge, "factorization degree " + std::to_string(rest.degree()) + " exceeds cap " +
                                          std::to_string(kMaxFactorDegree));
    }
    const ZPoly f = primitive_integer(rest);
    const int n = static_cast<int>(f.size()) - 1;
    // Monic transform F(y) = a^(n-1) f(y / a).
    const Integer a = f.back();
    ZPoly mon(f.size());
    Integer pw = 1;
    for (int i = n - 1; i >= 0; --i) {
      mon[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * pw;
      pw *= a;
    }
    mon[static_cast<std::size_t>(n)] = 1;
    for (auto& g : zassenhaus(mon)) {
      // Undo the transform: G(a x), then take the primitive part.
      std::vector<Rational> back(g.size());
      Integer apow = 1;
      for (std::size_t i = 0; i < g.size(); ++i) {
        back[i] = Rational(g[i] * apow);
        apow *= a;
      }
      out.push_back(primitive_integer(Poly(std::move(back))));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

}  // namespace ftcat
