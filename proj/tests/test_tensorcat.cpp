#include <random>

#include "doctest.h"
#include "examples.hpp"
#include "ftcat/catalog.hpp"
#include "ftcat/error.hpp"
#include "ftcat/tensorcat.hpp"
#include "oracles.hpp"

using namespace ftcat;

namespace {

TensorCategory cat(const std::string& name) { return TensorCategory(build_named(name)); }

bool is_int(const NFElement& e, long v) { return e.is_rational() && e.rational_value() == v; }

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Real value pinned down by minimal polynomial and a rough location.
bool is_root(const NFElement& e, std::initializer_list<long> minpoly, double approx) {
  return minimal_polynomial(e) == ints(minpoly) && std::abs(to_real(e).approx() - approx) < 1e-3;
}

// Gr class of P_i.
GrVector row(const TensorCatData& c, int i) { return c.cartan[static_cast<std::size_t>(i)]; }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("every bundled example validates") {
  for (const auto& name : kExamples) {
    CAPTURE(name);
    CHECK(validate_category(build_named(name)).empty());
  }
}

TEST_CASE("fpdims examples") {
  const auto t3 = cat("taft:3");
  for (auto& d : t3.fpdims().d) CHECK(is_int(d, 1));
  const auto fib = cat("fibonacci");
  CHECK(is_int(fib.fpdims().d[0], 1));
  CHECK(is_root(fib.fpdims().d[1], {-1, -1, 1}, 1.618034));
  const auto mc = cat("modular-cyclic:5");
  REQUIRE(mc.fpdims().d.size() == 1);
  CHECK(is_int(mc.fpdims().d[0], 1));
}

TEST_CASE("fpdims reject non-transitive rings") {
  TensorCatData c;
  c.ring = direct_sum(build_vec().ring, build_vec().ring);
  c.cartan = {{1, 0}, {0, 1}};
  CHECK(code_of([&] { TensorCategory(c).fpdims(); }) == ErrorCode::NotTransitive);
}

TEST_CASE("exact eigen-residual M_i d = d_i d on every example") {
  for (const auto& name : kExamples) {
    CAPTURE(name);
    const auto c = cat(name);
    const auto& f = c.fpdims();
    const int n = c.rank();
    for (int i = 0; i < n; ++i) {
      const IntMatrix m = mult_matrix(c.ring(), c.ring().basis(i), Side::Left);
      for (int k = 0; k < n; ++k) {
        NFElement lhs = NFElement::rational(f.field, 0);
        for (int j = 0; j < n; ++j)
          lhs += NFElement::rational(f.field, Rational(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])) *
                 f.d[static_cast<std::size_t>(j)];
        CHECK(lhs == f.d[static_cast<std::size_t>(i)] * f.d[static_cast<std::size_t>(k)]);
      }
      CHECK(sign(f.d[static_cast<std::size_t>(i)]) > 0);
    }
  }
}

TEST_CASE("fpdim_object examples") {
  const auto fib = cat("fibonacci");
  CHECK(is_int(fpdim_object(fib, fib.ring().unit_vector()), 1));
  CHECK(is_root(fpdim_object(fib, {1, 1}), {1, -3, 1}, 2.618034));
  const auto t4 = cat("taft:4");
  CHECK(is_int(fpdim_object(t4, row(t4.data(), 0)), 4));
  CHECK_THROWS_AS(fpdim_object(fib, {1, 1, 1}), Error);
}

TEST_CASE("fpdim_category examples") {
  CHECK(is_int(fpdim_category(cat("vec")), 1));
  for (int l : {2, 3, 4, 6}) CHECK(is_int(fpdim_category(cat("taft:" + std::to_string(l))), l * l));
  CHECK(is_root(fpdim_category(cat("fibonacci")), {5, -5, 1}, 3.618034));
  CHECK(is_int(fpdim_category(cat("group:S3")), 6));
  CHECK(is_int(fpdim_category(cat("modular-cyclic:2^2")), 4));
}

TEST_CASE("FP dimension is multiplicative on 100 random pairs per example") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(0, 3);
  for (const auto& name : kExamples) {
    CAPTURE(name);
    const auto c = cat(name);
    for (int t = 0; t < 100; ++t) {
      GrVector x(static_cast<std::size_t>(c.rank())), y(x.size());
      for (auto& v : x) v = coef(rng);
      for (auto& v : y) v = coef(rng);
      CHECK(fpdim_object(c, gr_mul(c.ring(), x, y)) == fpdim_object(c, x) * fpdim_object(c, y));
    }
  }
}

TEST_CASE("proj_tensor examples and FP preservation") {
  const auto sw = build_named("taft:2");
  CHECK(proj_tensor(sw, 0, sw.ring.unit_vector(), Side::Right) == KVector{1, 0});
  CHECK(proj_tensor(sw, 0, sw.ring.basis(1), Side::Right) == KVector{0, 1});
  const auto mc = build_named("modular-cyclic:3");
  CHECK(proj_tensor(mc, 0, {1}, Side::Right) == KVector{1});
  CHECK(code_of([&] { proj_tensor(sw, 5, sw.ring.unit_vector(), Side::Right); }) == ErrorCode::IndexOutOfRange);

  std::mt19937 rng(8);
  std::uniform_int_distribution<int> coef(0, 2);
  for (const auto& name : kExamples) {
    CAPTURE(name);
    const auto c = cat(name);
    for (int t = 0; t < 20; ++t) {
      const int i = static_cast<int>(rng() % static_cast<unsigned>(c.rank()));
      GrVector z(static_cast<std::size_t>(c.rank()));
      for (auto& v : z) v = coef(rng);
      for (Side s : {Side::Right, Side::Left})
        CHECK(fpdim_kvector(c, proj_tensor(c.data(), i, z, s)) == fpdim_projective(c, i) * fpdim_object(c, z));
    }
  }
}

TEST_CASE("proj_fusion examples and left/right agreement") {
  CHECK(proj_fusion(build_named("taft:2"), 0, 0) == KVector{1, 1});
  CHECK(proj_fusion(build_named("taft:3"), 0, 1) == KVector{1, 1, 1});
  const auto s3 = build_named("group:S3");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(proj_fusion(s3, i, j)[static_cast<std::size_t>(k)] == s3.ring.N(i, j, k));
  for (const auto& name : kExamples) {
    CAPTURE(name);
    const auto c = build_named(name);
    const int n = c.ring.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(proj_fusion(c, i, j) == proj_fusion_left(c, i, j));
  }
}

TEST_CASE("regular object") {
  const auto vec = cat("vec");
  REQUIRE(regular_object(vec).size() == 1);
  CHECK(is_int(regular_object(vec)[0], 1));
  for (auto& x : regular_object(cat("taft:4"))) CHECK(is_int(x, 1));
  const auto r = regular_object(cat("fibonacci"));
  CHECK(is_int(r[0], 1));
  CHECK(is_root(r[1], {-1, -1, 1}, 1.618034));
}

TEST_CASE("semisimple iff identity Cartan iff the regular class equals the FP vector") {
  for (const auto& name : kExamples) {
    CAPTURE(name);
    const auto c = cat(name);
    const int n = c.rank();
    bool identity = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != (i == j)) identity = false;
    const auto reg = regular_object(c);
    bool regular_is_d = true;
    for (int j = 0; j < n; ++j) {
      NFElement s = NFElement::rational(c.fpdims().field, 0);
      for (int i = 0; i < n; ++i)
        s += reg[static_cast<std::size_t>(i)] *
             NFElement::rational(c.fpdims().field, Rational(c.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      if (!(s == c.fpdims().d[static_cast<std::size_t>(j)])) regular_is_d = false;
    }
    CHECK(is_semisimple(c.data()) == identity);
    CHECK(identity == regular_is_d);
  }
}

TEST_CASE("distinguished object examples") {
  for (const std::string name : {"vec", "fibonacci", "group:S3", "group:2x2", "pointed:4"}) {
    CAPTURE(name);
    const auto c = cat(name);
    const auto d = distinguished(c);
    CHECK(d.rho == c.ring().unit_index());
    for (int i = 0; i < c.rank(); ++i) CHECK(d.D[static_cast<std::size_t>(i)] == c.ring().star(i));
    CHECK(is_unimodular(c));
  }
  const auto sw = cat("taft:2");
  const auto d = distinguished(sw);
  CHECK(d.rho == 1);
  CHECK(d.D == std::vector<int>{1, 0});
  CHECK_FALSE(is_unimodular(sw));
  CHECK(is_unimodular(cat("modular-cyclic:3")));

  auto bare = build_named("taft:2");
  bare.socle.reset();
  const TensorCategory nb(bare);
  CHECK(code_of([&] { distinguished(nb); }) == ErrorCode::Ambiguous);
  const auto cands = distinguished_candidates(nb);
  CHECK(cands.size() == 2);
  CHECK(std::find(cands.begin(), cands.end(), Distinguished{0, {0, 1}}) != cands.end());
  CHECK(std::find(cands.begin(), cands.end(), Distinguished{1, {1, 0}}) != cands.end());

  auto bad = build_named("taft:3");
  bad.socle = std::vector<int>{0, 2, 1};
  CHECK(code_of([&] { distinguished(TensorCategory(bad)); }) == ErrorCode::InconsistentData);
}

TEST_CASE("duality identities for the distinguished object on Gr classes") {
  for (const auto& name : kExamples) {
    const auto c = cat(name);
    if (!c.data().socle) continue;
    CAPTURE(name);
    const auto& r = c.ring();
    const auto d = distinguished(c);
    const GrVector lr = r.basis(d.rho), lrs = r.basis(r.star(d.rho));
    for (int i = 0; i < c.rank(); ++i) {
      CHECK(d.D[static_cast<std::size_t>(d.D[static_cast<std::size_t>(i)])] == r.star(r.star(i)));
      // P_D(i) = P_*i L_rho
      CHECK(row(c.data(), d.D[static_cast<std::size_t>(i)]) == gr_mul(r, row(c.data(), r.star_inv(i)), lr));
      // P_i** = L_rho* P_**i L_rho
      const int ss = r.star(r.star(i)), ii = r.star_inv(r.star_inv(i));
      CHECK(row(c.data(), ss) == gr_mul(r, gr_mul(r, lrs, row(c.data(), ii)), lr));
      CHECK(r.basis(ss) == gr_mul(r, gr_mul(r, lrs, r.basis(ii)), lr));
    }
  }
}

TEST_CASE("Cartan rank and the degeneracy finding") {
  const auto sw = cartan_rank(build_named("taft:2"));
  CHECK(sw.rank_q == 1);
  CHECK(sw.ground_rank() < sw.size);
  for (int p : {2, 3, 5}) {
    const auto m = cartan_rank(build_modular_cyclic(p, 1));
    CHECK(m.rank_q == 1);
    REQUIRE(m.rank_p);
    CHECK(*m.rank_p == 0);
    CHECK(oracle::rank_mod_p({{p}}, p) == 0);
  }
  const auto fib = cartan_rank(build_named("fibonacci"));
  CHECK(fib.ground_rank() == 2);
  CHECK(fib.findings.empty());

  auto fake = build_named("taft:2");
  fake.cartan = {{2, 1}, {1, 2}};
  fake.socle.reset();
  fake.pivotal_trace_exists = true;
  CHECK(has_code(cartan_rank(fake).findings, "lorentz_violation"));

  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto m = oracle::random_nonneg(rng, 1 + t % 5, 3);
    CHECK(matrix_rank(m) == oracle::rank_q(oracle::to_q(m)));
    CHECK(matrix_rank(m, 3) == oracle::rank_mod_p(m, 3));
  }
}

TEST_CASE("integrality flag") {
  CHECK(integrality_flag(cat("taft:3")));
  CHECK_FALSE(integrality_flag(cat("fibonacci")));
  CHECK(integrality_flag(cat("group:S3")));
  const auto s3 = cat("group:S3");
  std::vector<long> dims;
  for (auto& d : s3.fpdims().d) dims.push_back(d.rational_value().get_num().get_si());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<long>{1, 1, 2});
}

TEST_CASE("dimension inequality") {
  for (int l : {2, 3, 4, 6}) {
    const auto di = dimension_inequality(cat("taft:" + std::to_string(l)));
    CHECK(di.sign == 0);
    CHECK(di.slack.is_zero());
  }
  CHECK(dimension_inequality(cat("vec")).sign == 0);
  const auto s3 = dimension_inequality(cat("group:S3"));
  CHECK(s3.sign == 1);
  CHECK(is_int(s3.slack, 3));
  for (const auto& name : kExamples) {
    CAPTURE(name);
    const auto di = dimension_inequality(cat(name));
    CHECK(di.sign >= 0);
    CHECK(di.findings.empty());
  }
}

TEST_CASE("Deligne product") {
  const auto sw = build_named("taft:2");
  const auto ss = deligne_product(sw, sw);
  CHECK(ss.ring.rank() == 4);
  for (auto& r : ss.cartan)
    for (auto x : r) CHECK(x == 1);
  CHECK(validate_category(ss).empty());
  CHECK(is_int(fpdim_category(TensorCategory(ss)), 16));

  const auto fib = build_named("fibonacci");
  const TensorCategory ff(deligne_product(fib, fib));
  CHECK(minimal_polynomial(fpdim_category(ff)) == ints({25, -15, 1}));

  const auto x = build_named("group:S3");
  const auto vx = deligne_product(build_vec(), x);
  CHECK(vx.ring.fusion() == x.ring.fusion());
  CHECK(vx.cartan == x.cartan);

  CHECK(code_of([&] { deligne_product(sw, build_modular_cyclic(2, 1)); }) == ErrorCode::CharacteristicMismatch);

  const std::vector<std::string> names = {"vec", "fibonacci", "taft:2", "taft:3", "group:S3", "pointed:4"};
  for (const auto& a : names)
    for (const auto& b : names) {
      CAPTURE(a);
      CAPTURE(b);
      const auto ca = build_named(a), cb = build_named(b);
      const TensorCategory ab(deligne_product(ca, cb));
      CHECK(deligne_multiplicative(TensorCategory(ca), TensorCategory(cb), ab));
    }
}
