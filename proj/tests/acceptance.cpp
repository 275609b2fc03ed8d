#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "examples.hpp"
#include "ftcat/algebra_builders.hpp"
#include "ftcat/catalog.hpp"
#include "ftcat/error.hpp"
#include "ftcat/functors.hpp"
#include "ftcat/nimrep.hpp"
#include "oracles.hpp"

using namespace ftcat;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double s = since(t0);
  c.require(s < limit_s, "time limit exceeded");
  if (!c.ok) ++failures;
  std::printf("criterion %2d: %s  %-44s %8.3f s%s%s\n", n, c.ok ? "PASS" : "FAIL", title, s, c.ok ? "" : "  -- ",
              c.why.c_str());
  std::fflush(stdout);
}

bool is_int(const NFElement& e, long v) { return e.is_rational() && e.rational_value() == v; }

IntMatrix identity(int n) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

std::vector<int> iota(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

SMatrix qmat(const std::vector<std::vector<long>>& m) {
  SMatrix out;
  for (auto& r : m) {
    SVector row;
    for (long x : r) row.push_back(Scalar{Rational(x)});
    out.push_back(row);
  }
  return out;
}

std::string str(long x) { return std::to_string(x); }

// Every supergroup internal Hom instance with dim W <= 2 over a subgroup Z/2.
std::vector<std::pair<std::string, EquivariantAlgebra>> internal_homs() {
  const ExactField q = ExactField::rationals();
  struct YB {
    int w;
    std::vector<std::vector<long>> y, b;
  };
  const std::vector<YB> shapes = {
      {0, {}, {}},
      {1, {}, {}},
      {1, {{1}}, {{1}}},
      {1, {{1}}, {{0}}},
      {1, {{1}}, {{-2}}},
      {2, {}, {}},
      {2, {{1, 0}}, {{1}}},
      {2, {{1, 1}}, {{0}}},
      {2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}},
      {2, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}},
      {2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 0}}},
      {2, {{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}},
      {2, {{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}},
  };
  struct GH {
    std::string g;
    std::vector<int> chi, h;
  };
  const std::vector<GH> groups = {{"2", {-1}, {0, 1}}, {"2x2", {-1, 1}, {0, 1}}, {"2x2", {-1, 1}, {0, 2}},
                                  {"2x2", {-1, 1}, {0, 3}}};
  std::vector<std::pair<std::string, EquivariantAlgebra>> out;
  for (const auto& gh : groups)
    for (const auto& s : shapes) {
      SuperData d;
      d.group = parse_group(gh.g);
      d.u = 1;
      d.chi = gh.chi;
      d.h = gh.h;
      d.w_dim = s.w;
      d.y = qmat(s.y);
      d.b = qmat(s.b);
      out.emplace_back("internal Hom G=" + gh.g + " H=<" + str(gh.h[1]) + "> W=" + str(s.w) + " Y=" + str(static_cast<long>(s.y.size())),
                       supergroup_internal_hom(q, d));
    }
  return out;
}

oracle::Fusion to_fusion(const BasedRing& r) { return {r.rank(), r.fusion(), r.star_map(), r.unit_index()}; }

}  // namespace

int main() {
  criterion(1, "Taft dimensions d+ = l^2", 4.0, [](Check& c) {
    for (int l : {2, 3, 4, 6}) {
      const auto t0 = Clock::now();
      const RealAlgebraic d = to_real(fpdim_category(TensorCategory(build_taft(l))));
      c.require(equal(d, RealAlgebraic(Rational(l * l))), "d+ differs from l^2 at l = " + str(l));
      c.require(since(t0) < 1.0, "slow at l = " + str(l));
    }
    for (int l : {2, 3}) c.require(taft_projectives(l).dim == l * l, "dim H_l differs from l^2");
  });

  criterion(2, "distinguished object", 1.0, [](Check& c) {
    const TensorCategory sw(build_taft(2));
    const auto d = distinguished(sw);
    c.require(d.rho == 1 && d.D == std::vector<int>{1, 0}, "Sweedler rho/D wrong");
    for (const auto& name : kExamples) {
      const TensorCategory cat(build_named(name));
      if (!cat.data().socle) continue;
      const auto& r = cat.ring();
      const auto dd = distinguished(cat);
      c.require(check_distinguished(cat, dd).empty(), "pair checks fail for " + name);
      const GrVector lr = r.basis(dd.rho), lrs = r.basis(r.star(dd.rho));
      for (int i = 0; i < cat.rank(); ++i) {
        const GrVector pd = cat.cartan()[static_cast<std::size_t>(dd.D[static_cast<std::size_t>(i)])];
        c.require(pd == gr_mul(r, cat.cartan()[static_cast<std::size_t>(r.star_inv(i))], lr), "P_D(i) identity fails for " + name);
        const int ss = r.star(r.star(i)), ii = r.star_inv(r.star_inv(i));
        c.require(cat.cartan()[static_cast<std::size_t>(ss)] ==
                      gr_mul(r, gr_mul(r, lrs, cat.cartan()[static_cast<std::size_t>(ii)]), lr),
                  "P_i** identity fails for " + name);
      }
      if (is_semisimple(cat.data())) c.require(dd.rho == r.unit_index(), "semisimple " + name + " has rho != unit");
    }
  });

  criterion(3, "categorical freeness", 1.0, [](Check& c) {
    for (int l : {2, 3, 4, 6}) {
      IntMatrix ones(static_cast<std::size_t>(l), std::vector<std::int64_t>(static_cast<std::size_t>(l), 1));
      FunctorData f{TensorCategory(build_taft(l)), TensorCategory(build_pointed(parse_group(str(l)))), identity(l), ones,
                    std::nullopt, true};
      const auto fr = freeness_check(f);
      c.require(fr.ok && is_int(fr.ratio, l), "Taft ratio wrong at l = " + str(l));
      const auto inf = integer_freeness(f);
      c.require(inf.integer && inf.rank == l, "integer freeness fails at l = " + str(l));
    }
    const IntMatrix a = {{1, 0, 0}, {1, 0, 0}, {0, 1, 1}};
    FunctorData s3{TensorCategory(build_named("group:S3")), TensorCategory(build_pointed(parse_group("3"))), a,
                   IntMatrix{{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}, std::nullopt, true};
    const auto fr = freeness_check(s3);
    c.require(fr.ok && is_int(fr.ratio, 2), "S3 ratio differs from 2");
  });

  criterion(4, "Lagrange quotients", 1.0, [](Check& c) {
    const auto q = lagrange(TensorCategory(build_vec()), TensorCategory(build_fibonacci()), {0});
    c.require(minimal_polynomial(q.quotient) == std::vector<Integer>{5, -5, 1}, "Fibonacci quotient minpoly");
    c.require(q.integral && is_algebraic_integer(q.quotient), "Fibonacci quotient not integral");
    for (int l : {2, 3, 4, 6}) {
      const auto t = lagrange(TensorCategory(build_pointed(parse_group(str(l)))), TensorCategory(build_taft(l)), iota(l));
      c.require(is_int(t.quotient, l) && t.integral, "Taft quotient wrong at l = " + str(l));
    }
  });

  criterion(5, "Cartan degeneracy", 1.0, [](Check& c) {
    const auto sw = build_taft(2);
    c.require(sw.pivotal_trace_exists == std::optional<bool>(true), "Sweedler lacks the pivotal flag");
    const auto r = cartan_rank(sw);
    c.require(r.ground_rank() < r.size, "Sweedler Cartan not degenerate");
    for (int p : {2, 3, 5}) {
      const auto m = cartan_rank(build_modular_cyclic(p, 1));
      c.require(m.ground_rank() < m.size, "modular cyclic not degenerate at p = " + str(p));
    }
    const auto f = cartan_rank(build_fibonacci());
    c.require(f.ground_rank() == f.size, "Fibonacci not full rank");
  });

  criterion(6, "NIM-rep census", 30.0, [](Check& c) {
    for (int l : {2, 3, 4, 6}) {
      const auto ms = enumerate(build_taft(l).ring, l, true);
      std::set<int> ranks;
      for (auto& e : taft_module_census(l)) ranks.insert(e.simple_count);
      c.require(census_match(ms, std::vector<int>(ranks.begin(), ranks.end())), "census mismatch at l = " + str(l));
      c.require(census_match(ms, divisors(l)), "not one module per divisor at l = " + str(l));
    }
    const BasedRing fib = build_fibonacci().ring;
    const auto f = enumerate(fib, 3, true);
    c.require(f.size() == 1 && f[0] == canonical_form(regular_module(fib)), "Fibonacci enumeration is not the regular module");
  });

  criterion(7, "Rep(G) module category counts", 1.0, [](Check& c) {
    c.require(count_repG_module_cats(parse_group("2x2"), 0).total == 6, "(Z/2)^2 char 0");
    c.require(count_repG_module_cats(parse_group("2x2"), 2).total == 5, "(Z/2)^2 char 2");
    for (int p : {2, 3, 5, 7, 11}) c.require(count_repG_module_cats(parse_group(str(p)), p).total == 2, "Z/p char p");
    for (int n = 2; n <= 12; ++n)
      c.require(count_repG_module_cats(parse_group(str(n)), 0).total == oracle::count_subgroups_brute({n}),
                "Z/n count at n = " + str(n));
  });

  std::vector<std::pair<std::string, EquivariantAlgebra>> built;
  criterion(8, "simple from the right", 600.0, [&](Check& c) {
    const ExactField q = ExactField::rationals();
    auto simple = [&](const std::string& name, const EquivariantAlgebra& a, bool want) {
      const auto t0 = Clock::now();
      const auto r = is_simple_from_right(a);
      c.require(r.simple == want, name + ": wrong verdict");
      if (!want) c.require(r.witness && !r.witness->empty(), name + ": no witness");
      c.require(a.dim > 16 || since(t0) < 5.0, name + ": closure slower than 5 s");
      built.emplace_back(name, a);
    };
    for (auto [l, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 3}, {4, 2}})
      simple("A(" + str(l) + "," + str(d) + ",1)", build_taft_A(l, d, 1), true);
    for (auto& [name, a] : internal_homs()) simple(name, a, true);
    simple("k[Z2/1]", build_group_quotient(q, parse_group("2"), {0}), true);
    simple("k[Z4/1]", build_group_quotient(q, parse_group("4"), {0}), true);
    simple("k[Z2xZ2/Z2]", build_group_quotient(q, parse_group("2x2"), {0, 1}), true);
    const auto s3 = FiniteGroup::from_spec(parse_group("S3"));
    for (int x = 0; x < s3.order(); ++x)
      if (s3.element_order(x) == 3) {
        simple("k[S3/Z3]", build_group_quotient(q, parse_group("S3"), s3.generated({x})), true);
        break;
      }
    // k^2 = k[e]/(e^2 - e) with no group acting
    Presentation p;
    p.field = q;
    p.generators = {"e"};
    p.rules.push_back({{0, 0}, {Term{q.one(), {0}}}});
    simple("k^2 trivial action", build_from_presentation(p), false);
  });

  criterion(9, "filtration properties", 60.0, [&](Check& c) {
    for (auto& [name, a] : built) {
      c.require(validate_algebra(a).empty(), name + ": invariant suite fails");
      c.require(compute_filtration(a).findings.empty(), name + ": filtration violations");
    }
    for (int l : {2, 3, 4})
      for (int d : divisors(l)) {
        const auto a = build_taft_A(l, d, 1);
        c.require(compute_filtration(a).findings.empty(), "A(" + str(l) + "," + str(d) + ") filtration");
        c.require(verify_taft_derivative_powers(a, l).empty(), "derivative powers at l = " + str(l));
      }
  });

  criterion(10, "invariant suites", 120.0, [](Check& c) {
    std::mt19937 rng(20240);
    std::uniform_int_distribution<int> coef(0, 3);
    std::vector<BasedRing> rings;
    for (const auto& name : kExamples) {
      const TensorCatData data = build_named(name);
      const TensorCategory cat(data);
      const BasedRing& r = data.ring;
      const int n = r.rank();
      c.require(validate_ring(r).empty() && oracle::based_ring_ok(to_fusion(r)), name + ": ring axioms");
      if (n > 1) rings.push_back(r);
      const auto& f = cat.fpdims();
      for (int i = 0; i < n; ++i) {
        const IntMatrix m = mult_matrix(r, r.basis(i), Side::Left);
        for (int k = 0; k < n; ++k) {
          NFElement lhs = NFElement::rational(f.field, 0);
          for (int j = 0; j < n; ++j)
            lhs += NFElement::rational(f.field, Rational(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])) *
                   f.d[static_cast<std::size_t>(j)];
          c.require(lhs == f.d[static_cast<std::size_t>(i)] * f.d[static_cast<std::size_t>(k)], name + ": eigen-residual");
        }
        for (int j = 0; j < n; ++j)
          c.require(proj_fusion(data, i, j) == proj_fusion_left(data, i, j), name + ": proj_fusion sides differ");
      }
      for (int t = 0; t < 100; ++t) {
        GrVector x(static_cast<std::size_t>(n)), y(x.size());
        for (auto& v : x) v = coef(rng);
        for (auto& v : y) v = coef(rng);
        c.require(fpdim_object(cat, gr_mul(r, x, y)) == fpdim_object(cat, x) * fpdim_object(cat, y), name + ": FP multiplicativity");
      }
      c.require(dimension_inequality(cat).sign >= 0, name + ": dimension inequality");
    }
    const std::vector<std::string> small = {"vec", "fibonacci", "taft:2", "taft:3", "group:S3", "pointed:4"};
    for (const auto& a : small)
      for (const auto& b : small) {
        const auto ca = build_named(a), cb = build_named(b);
        c.require(deligne_multiplicative(TensorCategory(ca), TensorCategory(cb), TensorCategory(deligne_product(ca, cb))),
                  "Deligne product " + a + " x " + b);
      }
    // 200 single-entry mutations: each is judged the same way as by the
    // independent checker, and every broken one is rejected.
    int caught = 0, broken = 0;
    for (int t = 0; t < 200; ++t) {
      BasedRing r = rings[static_cast<std::size_t>(t) % rings.size()];
      std::uniform_int_distribution<int> idx(0, r.rank() - 1);
      if (t % 2 == 0) {
        r.N(idx(rng), idx(rng), idx(rng)) += (rng() % 2) ? 1 : -1;
      } else {
        const int a = idx(rng), b = (a + 1 + idx(rng) % (r.rank() - 1)) % r.rank();
        std::swap(r.star_map()[static_cast<std::size_t>(a)], r.star_map()[static_cast<std::size_t>(b)]);
      }
      const bool ref = oracle::based_ring_ok(to_fusion(r));
      const bool lib = validate_ring(r, true).empty();
      c.require(ref == lib, "mutation " + str(t) + ": verdict differs from the oracle");
      if (!ref) {
        ++broken;
        if (!lib) ++caught;
      }
    }
    c.require(broken > 0 && caught == broken, "a broken mutation slipped through");
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
