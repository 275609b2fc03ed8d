#include <random>

#include "doctest.h"
#include "examples.hpp"
#include "ftcat/catalog.hpp"
#include "ftcat/error.hpp"
#include "ftcat/ring.hpp"
#include "oracles.hpp"

using namespace ftcat;

namespace {

oracle::Fusion to_fusion(const BasedRing& r) {
  oracle::Fusion f;
  f.n = r.rank();
  f.N = r.fusion();
  f.star = r.star_map();
  f.unit = r.unit_index();
  return f;
}

BasedRing fib() { return build_fibonacci().ring; }

GrVector random_vec(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(0, 3);
  GrVector v(static_cast<std::size_t>(n));
  for (auto& x : v) x = d(rng);
  return v;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST_CASE("validate_ring on the documented examples") {
  BasedRing z3 = group_ring(parse_group("3"));
  CHECK(validate_ring(z3, true).empty());
  CHECK(validate_ring(fib(), true).empty());

  BasedRing broken = fib();
  broken.N(1, 1, 0) = 0;
  const auto rep = validate_ring(broken);
  REQUIRE(has_code(rep, "coevaluation"));
  for (auto& f : rep)
    if (f.code == "coevaluation") CHECK(f.witness == std::vector<int>{1});
}

TEST_CASE("mult_matrix examples") {
  const BasedRing f = fib();
  CHECK(mult_matrix(f, f.basis(0), Side::Left) == IntMatrix{{1, 0}, {0, 1}});
  CHECK(mult_matrix(f, f.basis(1), Side::Left) == IntMatrix{{0, 1}, {1, 1}});
  const BasedRing z4 = group_ring(parse_group("4"));
  const IntMatrix m = mult_matrix(z4, z4.basis(1), Side::Left);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) CHECK(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] == ((k == (j + 1) % 4) ? 1 : 0));
  CHECK_THROWS_AS(mult_matrix(f, GrVector{1, 0, 0}, Side::Left), Error);
}

TEST_CASE("is_transitive examples") {
  CHECK(is_transitive(group_ring(parse_group("2x2"))));
  CHECK(is_transitive(fib()));
  const BasedRing zz = direct_sum(build_vec().ring, build_vec().ring);
  CHECK_FALSE(is_transitive(zz));
  CHECK(total_matrix(fib()) == IntMatrix{{1, 1}, {1, 2}});
}

TEST_CASE("gr_mul examples") {
  const BasedRing f = fib();
  CHECK(gr_mul(f, f.basis(1), f.basis(1)) == GrVector{1, 1});
  CHECK(gr_mul(f, f.unit_vector(), GrVector{2, 5}) == GrVector{2, 5});
  const BasedRing z4 = group_ring(parse_group("4"));
  CHECK(gr_mul(z4, z4.basis(1), z4.basis(3)) == z4.basis(0));
  CHECK_THROWS_AS(gr_mul(f, GrVector{1}, GrVector{1, 0}), Error);
}

TEST_CASE("ring invariants on every bundled example") {
  std::mt19937 rng(11);
  for (const auto& name : kExamples) {
    CAPTURE(name);
    const BasedRing r = build_named(name).ring;
    CHECK(validate_ring(r).empty());
    CHECK(oracle::based_ring_ok(to_fusion(r)));
    const int n = r.rank();
    for (int t = 0; t < 100; ++t) {
      const auto x = random_vec(rng, n), y = random_vec(rng, n), z = random_vec(rng, n);
      CHECK(gr_mul(r, gr_mul(r, x, y), z) == gr_mul(r, x, gr_mul(r, y, z)));
      CHECK(matmul(mult_matrix(r, x, Side::Left), mult_matrix(r, y, Side::Left)) ==
            mult_matrix(r, gr_mul(r, x, y), Side::Left));
      CHECK(star_vector(r, gr_mul(r, x, y)) == gr_mul(r, star_vector(r, y), star_vector(r, x)));
    }
  }
}

TEST_CASE("group ring agrees with the independent construction") {
  for (auto factors : std::vector<std::vector<int>>{{2}, {3}, {4}, {6}, {2, 2}, {2, 4}}) {
    GroupSpec g;
    g.factors = factors;
    const auto mine = to_fusion(group_ring(g));
    const auto ref = oracle::abelian_group_ring(factors);
    CHECK(mine.N == ref.N);
    CHECK(mine.star == ref.star);
  }
}

TEST_CASE("fuzzed mutations: validator verdict matches the oracle on 200 cases") {
  std::mt19937 rng(2024);
  std::vector<BasedRing> bases;
  for (const auto& name : kExamples) {
    const BasedRing r = build_named(name).ring;
    if (r.rank() > 1) bases.push_back(r);
  }
  int invalid = 0;
  for (int t = 0; t < 200; ++t) {
    BasedRing r = bases[static_cast<std::size_t>(t) % bases.size()];
    const int n = r.rank();
    std::uniform_int_distribution<int> idx(0, n - 1);
    switch (t % 3) {
      case 0: {
        const int i = idx(rng), j = idx(rng), k = idx(rng);
        r.N(i, j, k) += (rng() % 2) ? 1 : -1;
        break;
      }
      case 1: {
        const int a = idx(rng);
        int b = idx(rng);
        if (a == b) b = (a + 1) % n;
        std::swap(r.star_map()[static_cast<std::size_t>(a)], r.star_map()[static_cast<std::size_t>(b)]);
        break;
      }
      default: {
        const int i = idx(rng), j = idx(rng);
        const int k1 = idx(rng), k2 = (k1 + 1) % n;
        if (r.N(i, j, k1) > 0) {
          --r.N(i, j, k1);
          ++r.N(i, j, k2);
        } else {
          ++r.N(i, j, k1);
        }
      }
    }
    const bool ok_ref = oracle::based_ring_ok(to_fusion(r));
    const bool ok_lib = validate_ring(r, true).empty();
    CAPTURE(t);
    CHECK(ok_lib == ok_ref);
    if (!ok_ref) ++invalid;
  }
  // Nearly every single-entry perturbation of a fusion table breaks an axiom.
  CHECK(invalid >= 180);
}

TEST_CASE("every deliberately broken ring is caught") {
  std::mt19937 rng(99);
  for (const auto& name : kExamples) {
    const BasedRing base = build_named(name).ring;
    const int n = base.rank();
    for (int i = 0; i < n; ++i) {
      BasedRing r = base;
      r.N(r.unit_index(), i, i) = 0;  // unit law
      CHECK_FALSE(validate_ring(r).empty());
      r = base;
      r.N(i, r.star(i), r.unit_index()) = -1;
      CHECK(has_code(validate_ring(r), "negative_entry"));
    }
    if (n > 1) {
      BasedRing r = base;
      r.star_map()[static_cast<std::size_t>(r.unit_index())] = (r.unit_index() + 1) % n;
      CHECK_FALSE(validate_ring(r).empty());
    }
  }
}
