#include <doctest.h>

#include "eacp/elements.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace eacp;

namespace {
AlgebraElement el(std::initializer_list<Rational> c) {
  return AlgebraElement::from_coords(std::vector<Rational>(c));
}
const gen::Spec sex_diff = gen::from_ints({{1}}, {1});
const gen::Spec abelian = gen::from_ints({{0, 0}, {0, 0}}, {0, 0});
}  // namespace

TEST_CASE("absolute nilpotents") {
  const auto rep = absolute_nilpotents(sex_diff.algebra());
  CHECK(rep.hyperplane_u0);
  CHECK(rep.det_a_nonzero);
  CHECK(rep.extra_set.dimension() == 0);
  CHECK(rep.contains(el({0, 5})));
  CHECK(rep.contains(el({3, 0})));
  CHECK_FALSE(rep.contains(el({1, 1})));

  const Algebra ones = gen::from_ints({{1, 1}, {1, 1}}, {1, 1}).algebra();
  const auto r2 = absolute_nilpotents(ones);
  CHECK(r2.contains(el({1, -1, 1})));
  CHECK(r2.contains(el({-4, 4, 9})));
  CHECK(square(ones, el({1, -1, 1})).is_zero());
}

TEST_CASE("nilpotent report follows the transposed system") {
  // Sum_i a_ij x_i = 0 differs from A x = 0 for this matrix.
  const Algebra alg = gen::from_ints({{1, 1}, {0, 0}}, {0, 0}).algebra();
  const auto rep = absolute_nilpotents(alg);
  const AlgebraElement x = el({0, 1, 1});
  CHECK(square(alg, x).is_zero());
  CHECK(rep.contains(x));
  const AlgebraElement y = el({1, -1, 1});
  CHECK_FALSE(square(alg, y).is_zero());
  CHECK_FALSE(rep.contains(y));
}

TEST_CASE("idempotents of the two one-hen examples") {
  const auto rep = idempotents(sex_diff.algebra());
  CHECK(rep.det_poly.to_string("u") == "u - 1");
  REQUIRE(rep.rational_root_families.size() == 1);
  CHECK(rep.rational_root_families[0].u_star == Rational(1));
  CHECK(rep.rational_root_families[0].x_set.contains(Vector{Rational(1)}));
  CHECK(rep.contains(el({1, 1})));
  CHECK(rep.contains(el({0, 0})));
  CHECK_FALSE(rep.contains(el({2, 2})));

  const auto c1 = idempotents(gen::from_ints({{2}}, {0}).algebra());
  CHECK(c1.det_poly.to_string("u") == "2*u - 1");
  REQUIRE(c1.rational_root_families.size() == 1);
  CHECK(c1.rational_root_families[0].u_star == Rational(1, 2));
  CHECK(c1.rational_root_families[0].x_set.empty());
  CHECK_FALSE(c1.irrational_root_intervals.size());
  CHECK_FALSE(c1.identically_zero_det);
}

TEST_CASE("u = 0 never gives a nonzero idempotent") {
  CHECK_THROWS((void)idempotents_at(sex_diff.algebra(), Rational(0)));
  const auto rep = idempotents(sex_diff.algebra());
  CHECK_FALSE(rep.contains(el({3, 0})));
}

TEST_CASE("irrational roots are isolated, not solved") {
  // A^T has eigenvalues +-sqrt(2), so det(T_u) = 1 - 2u^2 up to sign.
  const Algebra alg = gen::from_ints({{0, 1}, {2, 0}}, {1, 1}).algebra();
  const auto rep = idempotents(alg);
  CHECK(rep.rational_root_families.empty());
  REQUIRE(rep.irrational_root_intervals.size() == 2);
  for (const auto& iv : rep.irrational_root_intervals) {
    CHECK(iv.hi - iv.lo <= Rational(1, 1000));
    CHECK(rep.det_poly(iv.lo).sign() * rep.det_poly(iv.hi).sign() <= 0);
  }
}

TEST_CASE("idempotent determinant agrees with the characteristic polynomial") {
  gen::Random rng(29);
  for (int t = 0; t < 100; ++t) {
    const gen::Spec s = rng.algebra(rng.size(1, 4));
    const auto rep = idempotents(s.algebra());
    const auto expected = oracle::idempotent_det_poly(s.table());
    for (std::size_t k = 0; k < expected.size(); ++k) {
      CHECK(rep.det_poly.coefficient(k) == expected[k]);
    }
    CHECK(rep.det_poly(Rational(0)) == Rational(s.n() % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("idempotents match a grid search for small algebras") {
  gen::Random rng(31);
  std::vector<Rational> grid;
  for (int p = -2; p <= 2; ++p) {
    for (int q : {1, 2}) grid.emplace_back(p, q);
  }
  for (int t = 0; t < 40; ++t) {
    const gen::Spec s = rng.rational_spectrum(1);
    const Algebra alg = s.algebra();
    const auto rep = idempotents(alg);
    for (const auto& x : grid) {
      for (const auto& u : grid) {
        const AlgebraElement e({x}, u);
        CHECK(rep.contains(e) == (square(alg, e) == e));
      }
    }
  }
}

TEST_CASE("unit search always fails with a valid certificate") {
  const auto r = find_unit(sex_diff.algebra());
  CHECK_FALSE(r.unit.has_value());
  CHECK(r.certificate.verify());
  const auto ab = find_unit(abelian.algebra());
  CHECK_FALSE(ab.unit.has_value());
  CHECK(ab.certificate.verify());
  const auto id = find_unit(gen::from_ints({{1, 0}, {0, 1}}, {0, 0}).algebra());
  CHECK(id.certificate.system == "rooster");
  CHECK(id.certificate.verify());
  CHECK(id.certificate.contradiction().find("0 = 1") != std::string::npos);
}

TEST_CASE("unit certificate agrees with a direct solve of e x = x") {
  gen::Random rng(37);
  for (int t = 0; t < 100; ++t) {
    const gen::Spec s = rng.algebra(rng.size(1, 4));
    const oracle::Table tab = s.table();
    const std::size_t d = s.n() + 1;
    // Unknown e; equations e e_k = e_k for every k, linear in e.
    oracle::Mat m;
    oracle::Vec rhs;
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t row = 0; row < d; ++row) {
        oracle::Vec eq(d);
        for (std::size_t p = 0; p < d; ++p) eq[p] = oracle::basis_product(tab, p, k)[row];
        m.push_back(eq);
        rhs.push_back(row == k ? Rational(1) : Rational(0));
      }
    }
    CHECK_FALSE(oracle::gauss(m, rhs, d).consistent);
    const auto r = find_unit(s.algebra());
    CHECK_FALSE(r.unit.has_value());
    CHECK(r.certificate.verify());
  }
}

TEST_CASE("solving ax = target") {
  const Algebra alg = sex_diff.algebra();
  const auto self = solve_ax_eq_b(alg, el({1, 1}), el({1, 1}));
  CHECK(self.contains(Vector{Rational(1), Rational(1)}));
  CHECK(solve_ax_eq_b(alg, el({1, 0}), el({0, 1})).empty());
  const auto zero = solve_ax_eq_b(alg, el({1, 0}), el({0, 0}));
  CHECK(zero.contains(Vector{Rational(7), Rational(0)}));
  const auto trivial = solve_ax_eq_b(alg, el({0, 0}), el({0, 0}));
  CHECK(trivial.dimension() == 2);
  CHECK(solve_ax_eq_b(alg, el({0, 0}), el({1, 0})).empty());
}

TEST_CASE("division witnesses") {
  const Algebra alg = sex_diff.algebra();
  for (const auto& a : {el({1, 1}), el({0, 3}), el({2, 0})}) {
    const auto w = division_witness(alg, a);
    CHECK(w.rank_augmented == w.rank_core + 1);
    CHECK(solve_ax_eq_b(alg, a, w.target).empty());
  }
  CHECK_THROWS_AS((void)division_witness(alg, el({0, 0})), std::invalid_argument);
  gen::Random rng(41);
  for (int t = 0; t < 50; ++t) {
    const gen::Spec s = rng.algebra(rng.size(1, 4));
    const Algebra a = s.algebra();
    AlgebraElement x = rng.element(s.n());
    if (x.is_zero()) continue;
    const auto w = division_witness(a, x);
    // Rank of the column space of L_x by the reference eliminator.
    oracle::Mat cols;
    for (std::size_t c = 0; c <= s.n(); ++c) {
      cols.push_back(oracle::mul(s.table(), x.coords(), oracle::unit(s.n() + 1, c)));
    }
    CHECK(w.rank_core == oracle::rank(cols, s.n() + 1));
    cols.push_back(w.target.coords());
    CHECK(oracle::rank(cols, s.n() + 1) == w.rank_core + 1);
  }
}

TEST_CASE("coordinate subalgebras") {
  const Algebra tri = gen::from_ints({{1, 0, 0}, {2, 1, 0}, {1, 1, 1}}, {1, 0, 1}).algebra();
  for (std::size_t m = 1; m <= 3; ++m) CHECK(is_coordinate_subalgebra(tri, m));
  const Algebra upper = gen::from_ints({{1, 1}, {0, 1}}, {1, 1}).algebra();
  CHECK_FALSE(is_coordinate_subalgebra(upper, 1));
  CHECK(is_coordinate_subalgebra(upper, 2));
  CHECK_THROWS((void)is_coordinate_subalgebra(upper, 0));
  CHECK_THROWS((void)is_coordinate_subalgebra(upper, 3));
}
