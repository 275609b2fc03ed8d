#include "doctest.h"
#include "examples.hpp"
#include "ftcat/algebra_builders.hpp"
#include "ftcat/catalog.hpp"
#include "ftcat/error.hpp"
#include "oracles.hpp"

using namespace ftcat;

namespace {

bool is_int(const NFElement& e, long v) { return e.is_rational() && e.rational_value() == v; }

IntMatrix ones(int n) { return IntMatrix(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 1)); }

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

TEST_CASE("Taft data") {
  for (int l : {2, 3, 4, 6}) {
    CAPTURE(l);
    const auto c = build_taft(l);
    CHECK(validate_category(c).empty());
    CHECK(c.cartan == ones(l));
    GroupSpec g;
    g.factors = {l};
    CHECK(c.ring.fusion() == group_ring(g).fusion());
    for (int i = 0; i < l; ++i) CHECK(c.ring.star(i) == (l - i) % l);
    CHECK(is_int(fpdim_category(TensorCategory(c)), l * l));
    CHECK(cartan_rank(c).rank_q == 1);
    REQUIRE(c.socle);
    CHECK(distinguished(TensorCategory(c)).rho == c.ring.star((*c.socle)[0]));
  }
  CHECK(code_of([] { build_taft(1); }) == ErrorCode::BadParameter);
}

TEST_CASE("Taft socle and Cartan data match the explicit Hopf algebra") {
  for (int l : {2, 3}) {
    CAPTURE(l);
    const auto tp = taft_projectives(l);
    const auto c = build_taft(l);
    CHECK(tp.dim == l * l);
    for (int i = 0; i < l; ++i) {
      CHECK(tp.projective_dims[static_cast<std::size_t>(i)] == l);
      for (int j = 0; j < l; ++j)
        CHECK(tp.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
              c.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    CHECK(tp.socle == *c.socle);
  }
}

TEST_CASE("modular cyclic data") {
  CHECK(build_modular_cyclic(2, 1).cartan == IntMatrix{{2}});
  CHECK(build_modular_cyclic(3, 1).cartan == IntMatrix{{3}});
  CHECK(build_modular_cyclic(2, 2).cartan == IntMatrix{{4}});
  CHECK(build_modular_cyclic(5, 1).characteristic == 5);
  CHECK(is_int(fpdim_category(TensorCategory(build_modular_cyclic(2, 1))), 2));
  CHECK(code_of([] { build_modular_cyclic(4, 1); }) == ErrorCode::NotPrime);
}

TEST_CASE("semisimple group data") {
  CHECK(build_group_semisimple(parse_group("2")).ring.rank() == 2);
  const TensorCategory s3(build_group_semisimple(parse_group("S3")));
  CHECK(is_int(fpdim_category(s3), 6));
  const TensorCategory k4(build_group_semisimple(parse_group("2x2")));
  CHECK(k4.rank() == 4);
  CHECK(invertibles(k4.ring()).size() == 4);
  CHECK(is_int(fpdim_category(k4), 4));
  for (const std::string g : {"2", "3", "2x2"}) {
    const auto p = build_pointed(parse_group(g));
    CHECK(p.ring.fusion() == build_group_semisimple(parse_group(g)).ring.fusion());
    CHECK(validate_category(p).empty());
  }
  CHECK(code_of([] { build_group_semisimple(parse_group("A5")); }) != ErrorCode::InvalidInput);
}

TEST_CASE("components") {
  const BasedRing fib = build_fibonacci().ring;
  CHECK(decompose_components(fib).size() == 1);
  const BasedRing z2 = group_ring(parse_group("2"));
  const auto parts = decompose_components(direct_sum(fib, z2));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].fusion() == fib.fusion());
  CHECK(parts[1].fusion() == z2.fusion());
  CHECK(decompose_components(direct_sum(build_vec().ring, build_vec().ring)).size() == 2);
}

TEST_CASE("Rep(G) module category counts") {
  CHECK(count_repG_module_cats(parse_group("2x2"), 0).total == 6);
  CHECK(count_repG_module_cats(parse_group("2x2"), 2).total == 5);
  for (int p : {2, 3, 5, 7}) CHECK(count_repG_module_cats(parse_group(std::to_string(p)), p).total == 2);
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(count_repG_module_cats(parse_group(std::to_string(n)), 0).total == oracle::count_subgroups_brute({n}));
  }
  for (auto f : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {3, 3}, {2, 2, 2}}) {
    GroupSpec g;
    g.factors = f;
    CHECK(static_cast<int>(count_repG_module_cats(g, 0).items.size()) == oracle::count_subgroups_brute(f));
  }
  // (Z/2)^3: 16 subgroups; rank-2 subgroups (7 of them) contribute 2, the whole group 2^3.
  CHECK(count_repG_module_cats(parse_group("2x2x2"), 0).total == 1 + 7 + 7 * 2 + 8);
  CHECK(code_of([] { count_repG_module_cats(parse_group("S3"), 0); }) == ErrorCode::UnsupportedGroup);
}

TEST_CASE("Taft module census") {
  for (int l : {2, 4, 6}) {
    const auto c = taft_module_census(l);
    CHECK(c.size() == 2 * divisors(l).size());
    for (int d : divisors(l)) {
      int nonss = 0, fam = 0;
      for (auto& e : c)
        if (e.simple_count == d) (e.parameter_dimension == 0 ? nonss : fam)++;
      CHECK(nonss == 1);
      CHECK(fam == 1);
    }
  }
  CHECK(divisors(6) == std::vector<int>{1, 2, 3, 6});
}

TEST_CASE("catalog names") {
  for (const auto& name : kExamples) {
    CHECK(is_catalog_name(name));
    CHECK(validate_ring(build_named(name).ring).empty());
  }
  CHECK_FALSE(is_catalog_name("nonsense"));
  CHECK(code_of([] { build_named("nonsense"); }) == ErrorCode::InvalidInput);
}
