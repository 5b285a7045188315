#include <doctest.h>

#include "eacp/algebra.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace eacp;

namespace {
AlgebraElement el(std::initializer_list<Rational> c) {
  return AlgebraElement::from_coords(std::vector<Rational>(c));
}
const gen::Spec sex_diff = gen::from_ints({{1}}, {1});
const gen::Spec ac_example = gen::from_ints({{1, 1}, {-1, -1}}, {0, 0});
}  // namespace

TEST_CASE("construction validates shapes") {
  CHECK_THROWS_AS(Algebra::from_rows({}, {}), DimensionError);
  CHECK_THROWS_AS(Algebra::from_rows({{Rational(1)}}, {Rational(1), Rational(0)}),
                  DimensionError);
  CHECK_THROWS_AS(Algebra::from_rows({{Rational(1), Rational(0)}, {Rational(1)}},
                                     {Rational(1), Rational(0)}),
                  DimensionError);
  const Algebra alg = ac_example.algebra();
  CHECK(alg.n() == 2);
  CHECK(alg.det_a().is_zero());
  CHECK(alg == new_algebra(alg.structure()));
}

TEST_CASE("basis table") {
  const Algebra alg = sex_diff.algebra();
  CHECK(alg.hen_rooster_product(0) == el({Rational(1, 2), Rational(1, 2)}));
  const Algebra big = ac_example.algebra();
  CHECK(multiply(big, big.basis(0), big.basis(1)).is_zero());
  CHECK(multiply(big, big.basis(2), big.basis(2)).is_zero());
  const Algebra zero = gen::from_ints({{0, 0}, {0, 0}}, {0, 0}).algebra();
  gen::Random rng(3);
  for (int t = 0; t < 20; ++t) CHECK(multiply(zero, rng.element(2), rng.element(2)).is_zero());
}

TEST_CASE("multiply and square examples") {
  const Algebra alg = sex_diff.algebra();
  CHECK(multiply(alg, el({1, 1}), el({1, 1})) == el({1, 1}));
  CHECK(square(alg, el({1, 1})) == el({1, 1}));
  const Algebra c1 = gen::from_ints({{2}}, {0}).algebra();
  CHECK(square(c1, el({1, 1})) == el({2, 0}));
  CHECK(square(c1, el({7, 0})).is_zero());
}

TEST_CASE("b functional and bisexual special case") {
  const Algebra alg = gen::from_ints({{1, 0}, {0, 1}}, {1, 1}).algebra();
  CHECK(b_functional(alg, el({2, 3, 9})) == Rational(5));
  const Algebra anti = gen::from_ints({{1, 0}, {0, 1}}, {1, -1}).algebra();
  CHECK(b_functional(anti, el({4, 4, 1})).is_zero());
  CHECK(is_bisexual_special_case(sex_diff.algebra()));
  CHECK_FALSE(is_bisexual_special_case(gen::from_ints({{2}}, {0}).algebra()));
  gen::Spec half;
  half.a = {{Rational(1, 2), Rational(1, 2)}, {Rational(0), Rational(1)}};
  half.b = {Rational(1), Rational(1)};
  CHECK(is_bisexual_special_case(half.algebra()));
}

TEST_CASE("plenary and principal powers") {
  const Algebra alg = sex_diff.algebra();
  const AlgebraElement x = el({2, 1});
  CHECK(plenary_power(alg, x, 0) == x);
  CHECK(plenary_power(alg, x, 1) == el({2, 2}));
  // Hand iteration: (2,1) -> (2,2) -> (4,4) -> (16,16).
  CHECK(plenary_power(alg, x, 2) == el({4, 4}));
  CHECK(plenary_power(alg, x, 3) == el({16, 16}));
  CHECK(plenary_power(alg, el({5, 0}), 1).is_zero());
  CHECK(principal_power(alg, el({1, 1}), 1) == el({1, 1}));
  CHECK(principal_power(alg, el({1, 1}), 2) == el({1, 1}));
  CHECK(principal_power(alg, el({1, 1}), 5) == el({1, 1}));
  CHECK_THROWS((void)principal_power(alg, x, 0));
  const Algebra ac = ac_example.algebra();
  gen::Random rng(5);
  for (int t = 0; t < 30; ++t) CHECK(principal_power(ac, rng.element(2), 3).is_zero());
}

TEST_CASE("dimension mismatch in products") {
  const Algebra alg = sex_diff.algebra();
  CHECK_THROWS_AS((void)multiply(alg, el({1, 1, 1}), el({1, 1})), DimensionError);
  CHECK_THROWS_AS((void)square(alg, el({1})), DimensionError);
}

TEST_CASE("laws on random algebras, checked against the raw table") {
  gen::Random rng(17);
  for (int t = 0; t < 150; ++t) {
    const gen::Spec s = rng.algebra(rng.size(1, 4));
    const Algebra alg = s.algebra();
    const oracle::Table tab = s.table();
    const AlgebraElement x = rng.element(s.n()), y = rng.element(s.n()), z = rng.element(s.n());
    const Rational al = rng.entry(), be = rng.entry();
    CHECK(multiply(alg, x, y).coords() == oracle::mul(tab, x.coords(), y.coords()));
    CHECK(multiply(alg, x, y) == multiply(alg, y, x));
    CHECK(multiply(alg, al * x + be * z, y) ==
          al * multiply(alg, x, y) + be * multiply(alg, z, y));
    CHECK(square(alg, x) == multiply(alg, x, x));
    CHECK(square(alg, AlgebraElement(x.h(), Rational(0))).is_zero());
    CHECK(b_functional(alg, x) == b_functional(alg, AlgebraElement(x.h(), Rational(7))));
  }
}
