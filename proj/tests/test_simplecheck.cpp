#include <chrono>
#include <random>

#include "doctest.h"
#include "ftcat/algebra.hpp"
#include "ftcat/algebra_builders.hpp"
#include "ftcat/error.hpp"
#include "ftcat/io.hpp"
#include "oracles.hpp"

using namespace ftcat;

namespace {

EquivariantAlgebra from_text(const std::string& text) { return algebra_from_json(parse_json(text)); }

const char* kGroupAlgebra = R"j({"generators": ["e"], "relations": [{"lhs": "ee", "rhs": [[1, "1"]]}]})j";
const char* kExterior = R"j({"generators": ["y"], "relations": [{"lhs": "yy", "rhs": []}]})j";
const char* kClifford = R"j({"generators": ["y"], "relations": [{"lhs": "yy", "rhs": [[3, "1"]]}]})j";
const char* kTwoPoints = R"j({"generators": ["e"], "relations": [{"lhs": "ee", "rhs": [[1, "e"]]}]})j";
const char* kExteriorWithD = R"j({
  "generators": ["y"], "relations": [{"lhs": "yy", "rhs": []}],
  "actions": [{"name": "u", "order": 2, "images": {"y": [[-1, "y"]]}}],
  "derivations": [{"name": "d", "twist": "u", "nilpotence": 2, "images": {"y": [[1, "1"]]}}],
  "parity": "u", "anticommuting": true})j";

SuperData super_z2(int w_dim, SMatrix y, SMatrix b) {
  const ExactField q = ExactField::rationals();
  SuperData s;
  s.group = parse_group("2");
  s.u = 1;
  s.chi = {-1};
  s.h = {0, 1};
  s.w_dim = w_dim;
  s.y = std::move(y);
  s.b = std::move(b);
  return s;
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

oracle::QMat to_q(const SMatrix& m) {
  oracle::QMat out;
  for (auto& r : m) {
    oracle::QVec row;
    for (auto& x : r) row.push_back(x.at(0));
    out.push_back(row);
  }
  return out;
}

std::vector<SMatrix> operators(const EquivariantAlgebra& a) {
  std::vector<SMatrix> ops;
  for (int j = 0; j < a.dim; ++j) ops.push_back(a.right_mult(a.basis_vector(j)));
  for (auto& g : a.actions) ops.push_back(g.matrix);
  for (auto& d : a.derivations) ops.push_back(d.matrix);
  return ops;
}

// Random invertible change of basis: a permutation times a unipotent matrix.
SMatrix random_change(const ExactField& f, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  SMatrix m(static_cast<std::size_t>(n), SVector(static_cast<std::size_t>(n), f.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int r = perm[static_cast<std::size_t>(i)];
      if (i == j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = f.one();
      else if (i < j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = f.from_rational(d(rng));
    }
  return m;
}

struct Timed {
  SimpleResult r;
  double seconds;
};
Timed timed_simple(const EquivariantAlgebra& a) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = is_simple_from_right(a);
  return {r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

void check_well_formed(const EquivariantAlgebra& a) {
  CHECK(validate_algebra(a).empty());
  const auto fl = compute_filtration(a);
  CHECK(fl.findings.empty());
  if (!fl.findings.empty()) MESSAGE(fl.findings.front().code << ": " << fl.findings.front().message);
}

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

TEST_CASE("presentations") {
  const auto g = from_text(kGroupAlgebra);
  CHECK(g.dim == 2);
  CHECK(semisimplicity_test(g));
  const auto e = from_text(kExterior);
  CHECK(e.dim == 2);
  CHECK_FALSE(semisimplicity_test(e));
  const auto c = from_text(kClifford);
  CHECK(c.dim == 2);
  CHECK(semisimplicity_test(c));
  for (auto* t : {kGroupAlgebra, kExterior, kClifford, kTwoPoints, kExteriorWithD}) check_well_formed(from_text(t));

  CHECK(code_of([] {
          from_text(R"j({"generators": ["a", "b"], "dimension_bound": 10})j");
        }) == ErrorCode::DimensionOverflow);
  CHECK(code_of([] {
          from_text(R"j({"generators": ["a"], "relations": [{"lhs": "aa", "rhs": [[1, "1"]]},
                       {"lhs": "a", "rhs": []}]})j");
        }) == ErrorCode::InconsistentRelations);
  CHECK(code_of([] {
          from_text(R"j({"generators": ["x", "y"], "relations": [{"lhs": "yx", "rhs": [[1, "xy"], [1, "1"]]},
                       {"lhs": "xx", "rhs": []}, {"lhs": "yy", "rhs": []}, {"lhs": "xy", "rhs": [[1, "1"]]}]})j");
        }) == ErrorCode::InconsistentRelations);
}

TEST_CASE("group quotients") {
  const ExactField q = ExactField::rationals();
  const auto k2 = build_group_quotient(q, parse_group("2"), {0});
  CHECK(k2.dim == 2);
  REQUIRE(k2.actions.size() == 1);
  CHECK(k2.actions[0].matrix == qmat({{0, 1}, {1, 0}}));
  CHECK(is_simple_from_right(k2).simple);
  check_well_formed(k2);

  const auto s3 = FiniteGroup::from_spec(parse_group("S3"));
  int r = 0;
  for (int x = 0; x < s3.order(); ++x)
    if (s3.element_order(x) == 3) r = x;
  const auto c3 = s3.generated({r});
  REQUIRE(c3.size() == 3);
  const auto k = build_group_quotient(q, parse_group("S3"), c3);
  CHECK(k.dim == 2);
  CHECK(is_simple_from_right(k).simple);
  check_well_formed(k);

  const auto pauli = build_group_quotient(q, parse_group("2x2"), {0, 1, 2, 3}, standard_cocycle_2x2(q), pauli_representation(q));
  CHECK(pauli.dim == 4);
  CHECK(is_simple_from_right(pauli).simple);
  CHECK(semisimplicity_test(pauli));
  check_well_formed(pauli);

  CHECK(code_of([&] { build_group_quotient(q, parse_group("4"), {0, 1, 2}); }) == ErrorCode::NotASubgroup);
  SMatrix bad = standard_cocycle_2x2(q);
  bad[1][1] = q.from_rational(2);
  CHECK(code_of([&] { build_group_quotient(q, parse_group("2x2"), {0, 1, 2, 3}, bad, pauli_representation(q)); }) ==
        ErrorCode::CocycleInvalid);
}

TEST_CASE("Clifford smash products") {
  const ExactField q = ExactField::rationals();
  const auto c1 = build_clifford_smash(q, super_z2(1, qmat({{1}}), qmat({{1}})));
  CHECK(c1.dim == 4);
  check_well_formed(c1);
  const auto c0 = build_clifford_smash(q, super_z2(1, qmat({{1}}), qmat({{0}})));
  CHECK(c0.dim == 4);
  check_well_formed(c0);
  CHECK_FALSE(semisimplicity_test(c0));
  const auto bare = build_clifford_smash(q, super_z2(1, {}, {}));
  CHECK(bare.dim == 2);
  check_well_formed(bare);
  CHECK(code_of([&] { build_clifford_smash(q, super_z2(2, qmat({{1, 0}, {0, 1}}), qmat({{0, 1}, {2, 0}}))); }) ==
        ErrorCode::AsymmetricForm);
  CHECK(code_of([&] { build_clifford_smash(ExactField::prime(2), super_z2(1, {}, {})); }) == ErrorCode::CharacteristicTwo);
}

TEST_CASE("A(d, lambda) dimensions, simplicity and semisimplicity") {
  for (int l : {2, 3, 4}) {
    for (int d = 1; d <= l; ++d) {
      if (l % d) continue;
      CAPTURE(l);
      CAPTURE(d);
      for (long lambda : {1L, 2L, -1L}) {
        const auto a = build_taft_A(l, d, lambda);
        CHECK(a.dim == l * (l / d));
        check_well_formed(a);
        CHECK(is_simple_from_right(a).simple);
        CHECK(semisimplicity_test(a));
      }
      CHECK(verify_taft_derivative_powers(build_taft_A(l, d, 1), l).empty());
    }
  }
  const auto z = build_taft_A(2, 1, 0);
  CHECK(z.dim == 4);
  check_well_formed(z);
  CHECK(build_taft_A(2, 2, 1).dim == 2);
  CHECK(code_of([] { build_taft_A(4, 3, 1); }) == ErrorCode::BadDivisor);
}

TEST_CASE("distinct lambda give distinct fingerprints") {
  for (auto [l, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {4, 2}}) {
    CAPTURE(l);
    CAPTURE(d);
    std::vector<Fingerprint> fps;
    for (long lambda : {1L, 2L, 3L}) {
      const auto a = build_taft_A(l, d, lambda);
      fps.push_back(fingerprint(a));
      REQUIRE(fps.back().lambda);
      CHECK(*fps.back().lambda == a.field.from_rational(lambda));
    }
    CHECK_FALSE(fps[0] == fps[1]);
    CHECK_FALSE(fps[1] == fps[2]);
    CHECK_FALSE(fps[0] == fps[2]);
  }
}

TEST_CASE("Burnside closure examples") {
  const auto k2 = build_group_quotient(ExactField::rationals(), parse_group("2"), {0});
  const auto r = is_simple_from_right(k2);
  CHECK(r.simple);
  CHECK(r.closure_dim == 4);

  const auto two = from_text(kTwoPoints);
  const auto t = is_simple_from_right(two);
  CHECK_FALSE(t.simple);
  CHECK(t.closure_dim == 2);
  REQUIRE(t.witness);
  REQUIRE(t.witness->size() == 1);
  // the witness is a proper right ideal
  Echelon span(two.field, two.dim);
  for (auto& w : *t.witness) span.insert(w);
  for (auto& w : *t.witness)
    for (int b = 0; b < two.dim; ++b) CHECK(span.contains(two.multiply(w, two.basis_vector(b))));

  const auto ext = from_text(kExteriorWithD);
  const auto e = is_simple_from_right(ext);
  CHECK(e.simple);
  CHECK(e.closure_dim == 4);
  CHECK_FALSE(is_simple_from_right(from_text(kExterior)).simple);
}

TEST_CASE("closure dimension agrees with the operator-algebra oracle") {
  const ExactField q = ExactField::rationals();
  std::vector<EquivariantAlgebra> algebras = {
      from_text(kGroupAlgebra), from_text(kExterior), from_text(kTwoPoints), from_text(kExteriorWithD),
      build_group_quotient(q, parse_group("2"), {0}),
      build_group_quotient(q, parse_group("2x2"), {0}),
      build_group_quotient(q, parse_group("2x2"), {0, 1, 2, 3}, standard_cocycle_2x2(q), pauli_representation(q)),
      build_clifford_smash(q, super_z2(1, qmat({{1}}), qmat({{1}}))),
      build_clifford_smash(q, super_z2(1, qmat({{1}}), qmat({{0}}))),
      build_taft_A(2, 1, 1), build_taft_A(2, 2, 1), build_taft_A(2, 1, 0),
  };
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    CAPTURE(i);
    const auto& a = algebras[i];
    REQUIRE(a.field.degree() == 1);
    std::vector<oracle::QMat> ops;
    for (auto& m : operators(a)) ops.push_back(to_q(m));
    const int want = oracle::operator_algebra_dim(ops);
    const auto r = is_simple_from_right(a);
    CHECK(r.closure_dim == want);
    CHECK(r.simple == (want == a.dim * a.dim));
  }
}

TEST_CASE("simplicity is invariant under a change of basis") {
  std::mt19937 rng(31);
  const ExactField q = ExactField::rationals();
  std::vector<EquivariantAlgebra> algebras = {
      from_text(kTwoPoints), from_text(kExteriorWithD), build_taft_A(2, 1, 1), build_taft_A(3, 1, 1),
      build_taft_A(4, 2, 2), build_clifford_smash(q, super_z2(1, qmat({{1}}), qmat({{1}}))),
      supergroup_internal_hom(q, super_z2(1, qmat({{1}}), qmat({{1}}))),
  };
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    CAPTURE(i);
    const auto& a = algebras[i];
    const auto base = is_simple_from_right(a);
    const auto fp = fingerprint(a);
    for (int t = 0; t < 2; ++t) {
      const auto b = rebase(a, random_change(a.field, a.dim, rng));
      CHECK(validate_algebra(b).empty());
      const auto r = is_simple_from_right(b);
      CHECK(r.simple == base.simple);
      CHECK(r.closure_dim == base.closure_dim);
      CHECK(fingerprint(b) == fp);
      CHECK(compute_filtration(b).dims == compute_filtration(a).dims);
    }
  }
}

TEST_CASE("filtration examples") {
  const auto ext = compute_filtration(from_text(kExteriorWithD));
  CHECK(ext.dims == std::vector<int>{1, 2});
  CHECK(ext.findings.empty());
  // A_0 = k[Z/2/1] for d = 1, A_0 = k for d = l
  const auto t21 = compute_filtration(build_taft_A(2, 1, 1));
  CHECK(t21.dims == std::vector<int>{2, 4});
  CHECK(t21.a0_simple == std::optional<bool>(true));
  const auto t22 = compute_filtration(build_taft_A(2, 2, 1));
  CHECK(t22.dims == std::vector<int>{1, 2});
  const auto flat = compute_filtration(from_text(kGroupAlgebra));
  CHECK(flat.dims == std::vector<int>{2});
  CHECK(flat.findings.empty());
  for (int l : {2, 3, 4}) {
    const auto f = compute_filtration(build_taft_A(l, 1, 1));
    REQUIRE(static_cast<int>(f.dims.size()) == l);
    for (int i = 0; i < l; ++i) CHECK(f.dims[static_cast<std::size_t>(i)] == l * (i + 1));
  }
}

TEST_CASE("semisimplicity test needs a large enough characteristic") {
  const auto a = from_text(R"j({"field": "GF(3)", "generators": ["e"], "relations": [{"lhs": "eee", "rhs": [[1, "1"]]}]})j");
  CHECK(a.dim == 3);
  CHECK(code_of([&] { semisimplicity_test(a); }) == ErrorCode::CharacteristicTooSmall);
  const auto b = from_text(R"j({"field": "GF(5)", "generators": ["e"], "relations": [{"lhs": "ee", "rhs": [[1, "1"]]}]})j");
  CHECK(semisimplicity_test(b));
}

TEST_CASE("internal Hom examples") {
  const ExactField q = ExactField::rationals();
  const auto c = supergroup_internal_hom(q, super_z2(1, qmat({{1}}), qmat({{1}})));
  CHECK(c.dim == 2);
  REQUIRE(c.parity);
  CHECK(is_simple_from_right(c).simple);
  check_well_formed(c);
  const auto e = supergroup_internal_hom(q, super_z2(1, qmat({{1}}), qmat({{0}})));
  CHECK(e.dim == 1);
  CHECK(is_simple_from_right(e).simple);
  const auto k = supergroup_internal_hom(q, super_z2(0, {}, {}));
  CHECK(k.dim == 1);
  CHECK(is_simple_from_right(k).simple);
  SuperData big = super_z2(2, qmat({{1, 0}, {0, 1}}), qmat({{1, 0}, {0, 1}}));
  CHECK(code_of([&] { supergroup_internal_hom(q, big, 2); }) == ErrorCode::DimensionOverflow);
}

TEST_CASE("every internal Hom algebra with dim W <= 2 over H = Z/2 is simple from the right") {
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
    std::vector<int> chi;
    std::vector<int> h;
  };
  const std::vector<GH> groups = {{"2", {-1}, {0, 1}}, {"2x2", {-1, 1}, {0, 1}}, {"2x2", {-1, 1}, {0, 2}},
                                  {"2x2", {-1, 1}, {0, 3}}};
  int count = 0;
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
      CAPTURE(gh.g);
      CAPTURE(gh.h[1]);
      CAPTURE(s.w);
      CAPTURE(s.y.size());
      const auto a = supergroup_internal_hom(q, d);
      check_well_formed(a);
      const auto t = timed_simple(a);
      CHECK(t.r.simple);
      CHECK(t.seconds < 5.0);
      ++count;
    }
  CHECK(count == 52);
}
