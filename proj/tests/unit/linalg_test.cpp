#include <doctest.h>

#include "eacp/linalg.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace eacp;

namespace {
Matrix ints(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<Vector> v;
  for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
  return Matrix::from_rows(v);
}
}  // namespace

TEST_CASE("determinant, rank and inverse") {
  const Matrix m = ints({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(m) == Rational(18));
  CHECK(rank(m) == 3);
  CHECK(inverse(m) * m == Matrix::identity(3));
  const Matrix s = ints({{1, 2}, {2, 4}});
  CHECK(determinant(s).is_zero());
  CHECK(rank(s) == 1);
  CHECK_THROWS_AS((void)inverse(s), std::domain_error);
}

TEST_CASE("nullspace vectors are annihilated") {
  const Matrix m = ints({{1, 2, 3}, {2, 4, 6}});
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(is_zero(m * v));
}

TEST_CASE("solve returns particular plus kernel, or empty") {
  const Matrix m = ints({{1, 1}, {2, 2}});
  const auto ok = solve(m, Vector{Rational(1), Rational(2)});
  REQUIRE_FALSE(ok.empty());
  CHECK(ok.dimension() == 1);
  CHECK(ok.contains(Vector{Rational(3), Rational(-2)}));
  const auto bad = solve(m, Vector{Rational(1), Rational(3)});
  CHECK(bad.empty());
  const auto y = farkas_certificate(m, Vector{Rational(1), Rational(3)});
  REQUIRE(y.has_value());
  const Vector row = m.transpose() * *y;
  CHECK(is_zero(row));
  CHECK_FALSE(dot(*y, Vector{Rational(1), Rational(3)}).is_zero());
  CHECK_FALSE(farkas_certificate(m, Vector{Rational(1), Rational(2)}).has_value());
}

TEST_CASE("subspace canonical form is basis independent") {
  const Vector a{Rational(1), Rational(2), Rational(0)};
  const Vector b{Rational(0), Rational(1), Rational(1)};
  const auto s1 = Subspace::span(3, {a, b});
  const auto s2 = Subspace::span(3, {add(a, b), subtract(a, b), scale(Rational(3), a)});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(Vector{Rational(1), Rational(3), Rational(1)}));
  CHECK_FALSE(s1.contains(Vector{Rational(0), Rational(0), Rational(1)}));
  CHECK(s1.plus(Subspace::span(3, {unit_vector(3, 2)})) == Subspace::whole(3));
  CHECK(Subspace::span(3, {zero_vector(3)}).is_zero());
}

TEST_CASE("random systems agree with the reference eliminator") {
  gen::Random rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = rng.size(1, 5), c = rng.size(1, 5);
    oracle::Mat rows(r, oracle::Vec(c));
    for (auto& row : rows)
      for (auto& x : row) x = rng.chance(0.4) ? Rational(0) : rng.entry();
    const Matrix m = Matrix::from_rows(rows);
    CHECK(rank(m) == oracle::rank(rows, c));
    if (r == c) CHECK(determinant(m) == oracle::det(rows));
    Vector rhs(r);
    for (auto& x : rhs) x = rng.entry();
    const auto ours = solve(m, rhs);
    const auto ref = oracle::gauss(rows, rhs, c);
    CHECK(ours.empty() == !ref.consistent);
    if (ref.consistent) {
      CHECK(ours.contains(ref.particular));
      CHECK(ours.dimension() == ref.kernel.size());
    }
  }
}
