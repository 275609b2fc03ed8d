#include <random>

#include "doctest.h"
#include "ftcat/algnum.hpp"
#include "ftcat/error.hpp"
#include "ftcat/factor.hpp"
#include "oracles.hpp"

using namespace ftcat;

namespace {

RealAlgebraic golden() { return perron_root({{0, 1}, {1, 1}}); }

RealAlgebraic sqrt_of(long n) {
  // x^2 - n on (1, n) for n >= 2 non-square.
  return RealAlgebraic({Integer(-n), 0, 1}, 1, n);
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

TEST_CASE("charpoly agrees with the Leverrier oracle") {
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 5;
    auto m = oracle::random_nonneg(rng, n, 3);
    const Poly p = charpoly(m);
    const auto ref = oracle::charpoly_leverrier(oracle::to_q(m));
    REQUIRE(p.degree() == n);
    for (int i = 0; i <= n; ++i) CHECK(p.coeff(i) == ref[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("factorization reproduces the input and yields irreducible pieces") {
  const Poly a = Poly::from_integers({-3, 0, 2}) * Poly::from_integers({1, 1, 0, 3}) * Poly::from_integers({-1, 1});
  const auto f = factor_squarefree(a);
  REQUIRE(f.size() == 3);
  Poly prod = Poly::constant(1);
  for (auto& g : f) prod = prod * Poly::from_integers(g);
  CHECK(prod == Poly::from_integers(primitive_integer(a)));
  CHECK(factor_squarefree(Poly::from_integers({1, 0, -10, 0, 1})).size() == 1);
  CHECK(factor_squarefree(Poly::from_integers({6, 0, -5, 0, 1})).size() == 2);
}

TEST_CASE("factorization refuses oversized remainders") {
  std::vector<Integer> c(15, 0);
  c[0] = -2;
  c[14] = 1;
  CHECK(code_of([&] { factor_squarefree(Poly::from_integers(c)); }) == ErrorCode::DegreeTooLarge);
}

TEST_CASE("perron_root examples") {
  const RealAlgebraic one = perron_root({{1}});
  CHECK(one.is_rational());
  CHECK(one.rational_value() == 1);
  CHECK(to_string(one.minpoly()) == "x-1");

  const RealAlgebraic phi = golden();
  CHECK(phi.minpoly() == std::vector<Integer>{-1, -1, 1});
  CHECK(phi.lo() == Rational(3, 2));
  CHECK(phi.hi() == Rational(7, 4));
  // Oracle: sign change of the independently computed charpoly.
  const auto cp = oracle::charpoly_leverrier({{0, 1}, {1, 1}});
  CHECK(oracle::eval(cp, Rational(3, 2)) < 0);
  CHECK(oracle::eval(cp, Rational(7, 4)) > 0);

  const RealAlgebraic three = perron_root({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(three.is_rational());
  CHECK(three.rational_value() == 3);
}

TEST_CASE("perron_root errors") {
  CHECK(code_of([] { perron_root({{1, 2}}); }) == ErrorCode::NonSquare);
  CHECK(code_of([] { perron_root({{1, -1}, {0, 1}}); }) == ErrorCode::NegativeEntry);
}

TEST_CASE("perron_root row bounds and power-iteration agreement on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 4;
    auto m = oracle::random_nonneg(rng, n, 3);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % n)] += 1;
    const RealAlgebraic r = perron_root(m);
    std::int64_t min_row = INT64_MAX, max_row = 0;
    for (auto& row : m) {
      std::int64_t s = 0;
      for (auto x : row) s += x;
      min_row = std::min(min_row, s);
      max_row = std::max(max_row, s);
    }
    CHECK(cmp(r, RealAlgebraic(Rational(min_row))) != Order::Less);
    CHECK(cmp(r, RealAlgebraic(Rational(max_row))) != Order::Greater);
    CHECK(r.approx() == doctest::Approx(static_cast<double>(oracle::spectral_radius(m))).epsilon(1e-9));
    // minpoly really vanishes inside the isolating interval
    const auto cp = oracle::charpoly_leverrier(oracle::to_q(m));
    if (!r.is_rational()) {
      CHECK(oracle::eval(cp, r.lo()) * oracle::eval(cp, r.hi()) <= 0);
    } else {
      CHECK(oracle::eval(cp, r.rational_value()) == 0);
    }
  }
}

TEST_CASE("field_solve_eigvector examples") {
  const FieldPtr f = make_field(golden());
  const NFElement phi = NFElement::generator(f);
  const auto v = field_solve_eigvector(IntMatrix{{0, 1}, {1, 1}}, phi, 0);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == NFElement::rational(f, 1));
  CHECK(v[1] == phi);

  const FieldPtr q3 = make_field(RealAlgebraic(3));
  const auto w = field_solve_eigvector(IntMatrix{{3}}, NFElement::rational(q3, 3), 0);
  CHECK(w[0].rational_value() == 1);

  const FieldPtr q1 = make_field(RealAlgebraic(1));
  CHECK(code_of([&] { field_solve_eigvector(IntMatrix{{1, 0}, {0, 1}}, NFElement::rational(q1, 1), 0); }) ==
        ErrorCode::EigenspaceDimensionNotOne);
  CHECK(code_of([&] { field_solve_eigvector(IntMatrix{{2, 0}, {0, 3}}, NFElement::rational(q1, 1), 0); }) ==
        ErrorCode::NotAnEigenvalue);
}

TEST_CASE("number field arithmetic") {
  const FieldPtr f = make_field(golden());
  const NFElement phi = NFElement::generator(f);
  const NFElement one = NFElement::rational(f, 1);
  const NFElement zero = NFElement::rational(f, 0);
  CHECK((phi * phi).coords() == std::vector<Rational>{1, 1});
  CHECK(phi + zero == phi);
  CHECK((phi / phi) == one);
  CHECK(((one + phi * phi) / (phi + one)) * (phi + one) == one + phi * phi);
  CHECK(code_of([&] { phi / zero; }) == ErrorCode::DivisionByZero);

  const FieldPtr g = make_field(sqrt_of(2));
  CHECK(code_of([&] { phi + NFElement::generator(g); }) == ErrorCode::GeneratorMismatch);
  // An independently constructed copy of the same field is accepted.
  const FieldPtr f2 = make_field(perron_root({{1, 1}, {1, 0}}));
  CHECK(phi + NFElement::generator(f2) == phi + phi);
}

TEST_CASE("minimal_polynomial and algebraic integers") {
  const FieldPtr f = make_field(golden());
  const NFElement phi = NFElement::generator(f);
  const NFElement a = NFElement::rational(f, 1) + phi * phi;
  CHECK(minimal_polynomial(a) == std::vector<Integer>{5, -5, 1});
  // Oracle: (5 +- sqrt5)/2 satisfy x^2 - 5x + 5 exactly: sum 5, product 5.
  CHECK(Rational(5, 2) + Rational(5, 2) == 5);
  CHECK(Rational(25, 4) - Rational(5, 4) == 5);
  CHECK(is_algebraic_integer(a));
  CHECK(minimal_polynomial(phi) == std::vector<Integer>{-1, -1, 1});
  CHECK(minimal_polynomial(NFElement::rational(f, 3)) == std::vector<Integer>{-3, 1});
  CHECK_FALSE(is_algebraic_integer(NFElement::rational(f, Rational(1, 2))));
  CHECK(minimal_polynomial(NFElement::rational(f, Rational(1, 2))) == std::vector<Integer>{-1, 2});
  for (int n = -5; n <= 5; ++n) CHECK(is_algebraic_integer(NFElement::rational(f, n)));
  CHECK(render(to_real(a), 3).find("≈ 3.618") != std::string::npos);
}

TEST_CASE("minimal polynomial of products agrees with the resultant oracle") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  const FieldPtr fields[] = {make_field(golden()), make_field(sqrt_of(2)), make_field(perron_root({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}))};
  int checked = 0;
  for (int t = 0; checked < 50; ++t) {
    const FieldPtr& f = fields[t % 3];
    std::vector<Rational> ca, cb;
    for (int i = 0; i < f->degree(); ++i) {
      ca.emplace_back(d(rng), 1 + std::abs(d(rng)));
      cb.emplace_back(d(rng), 1 + std::abs(d(rng)));
    }
    const NFElement a(f, ca), b(f, cb);
    if (a.is_zero() || b.is_zero()) continue;
    const Poly ma = Poly::from_integers(minimal_polynomial(a));
    const Poly mb = Poly::from_integers(minimal_polynomial(b));
    const Poly mab = Poly::from_integers(minimal_polynomial(a * b));
    const Poly ann = product_annihilator(ma, mb);
    CHECK((ann % mab).is_zero());
    // and mab vanishes at a*b evaluated in the field
    NFElement acc = NFElement::rational(f, 0);
    for (int i = mab.degree(); i >= 0; --i) acc = acc * (a * b) + NFElement::rational(f, mab.coeff(i));
    CHECK(acc.is_zero());
    ++checked;
  }
}

TEST_CASE("cmp examples and consistency with refined midpoints") {
  const RealAlgebraic phi = golden();
  CHECK(cmp(phi, RealAlgebraic(1)) == Order::Greater);
  CHECK(cmp(phi, perron_root({{1, 1}, {1, 0}})) == Order::Equal);
  CHECK(cmp(sqrt_of(2), RealAlgebraic(Rational(3, 2))) == Order::Less);
  const auto [lo, hi] = oracle::sqrt_interval(2, 20);
  CHECK(hi < Rational(3, 2));
  CHECK(lo > 1);

  std::vector<RealAlgebraic> vals;
  for (long n : {2, 3, 5, 6, 7}) vals.push_back(sqrt_of(n));
  vals.push_back(phi);
  vals.push_back(real_add(phi, sqrt_of(2)));
  vals.push_back(real_mul(phi, sqrt_of(3)));
  vals.push_back(RealAlgebraic(Rational(17, 10)));
  vals.push_back(RealAlgebraic(Rational(7, 4)));
  const Rational w(1, Integer(1) << 33);
  for (auto& a : vals)
    for (auto& b : vals) {
      const Order o = cmp(a, b);
      const RealAlgebraic ra = a.refined(w), rb = b.refined(w);
      const Rational ma = (ra.lo() + ra.hi()) / 2, mb = (rb.lo() + rb.hi()) / 2;
      if (o == Order::Less) CHECK(ma < mb);
      if (o == Order::Greater) CHECK(ma > mb);
      if (o == Order::Equal) CHECK(abs(ma - mb) < w);
      CHECK(cmp(b, a) == (o == Order::Less ? Order::Greater : o == Order::Greater ? Order::Less : Order::Equal));
    }
}

TEST_CASE("real arithmetic across fields") {
  const RealAlgebraic s2 = sqrt_of(2);
  const RealAlgebraic two = real_mul(s2, s2);
  CHECK(two.is_rational());
  CHECK(two.rational_value() == 2);
  const RealAlgebraic s6 = real_mul(s2, sqrt_of(3));
  CHECK(cmp(s6, sqrt_of(6)) == Order::Equal);
  const RealAlgebraic z = real_add(s2, real_neg(s2));
  CHECK(z.is_rational());
  CHECK(z.rational_value() == 0);
  const RealAlgebraic x = real_add(s2, sqrt_of(3));
  CHECK(x.minpoly() == std::vector<Integer>{1, 0, -10, 0, 1});
}

TEST_CASE("algebraic integers are closed under multiplication") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  std::uniform_int_distribution<int> den(1, 2);
  for (const FieldPtr& f : {make_field(golden()), make_field(sqrt_of(2))}) {
    int seen = 0;
    for (int t = 0; t < 400 && seen < 40; ++t) {
      const NFElement a(f, {Rational(d(rng), den(rng)), Rational(d(rng), den(rng))});
      const NFElement b(f, {Rational(d(rng), den(rng)), Rational(d(rng), den(rng))});
      if (!is_algebraic_integer(a) || !is_algebraic_integer(b)) continue;
      CHECK(is_algebraic_integer(a * b));
      ++seen;
    }
    CHECK(seen >= 20);
  }
}

TEST_CASE("rendering") {
  CHECK(render(golden(), 4) == "x^2-x-1; [3/2, 7/4]; ≈ 1.6180");
  CHECK(render(RealAlgebraic(3), 4) == "x-3; ≈ 3.0000");
  CHECK(to_decimal(RealAlgebraic(Rational(-1, 8)), 2) == "-0.13");
}
