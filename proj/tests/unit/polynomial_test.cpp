#include <doctest.h>

#include "eacp/polynomial.hpp"

using namespace eacp;

namespace {
Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }
Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (const auto& r : roots) p *= Polynomial::x() - Polynomial::constant(r);
  return p;
}
}  // namespace

TEST_CASE("construction trims and reports degree") {
  CHECK(Polynomial().degree() == -1);
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(poly({-1, 2}).to_string("u") == "2*u - 1");
  CHECK(poly({0, 0, 3})(Rational(2)) == Rational(12));
}

TEST_CASE("division and gcd") {
  const Polynomial a = from_roots({1, 2, 3});
  const Polynomial b = from_roots({2, 5});
  const auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(gcd(a, b) == from_roots({2}));
  CHECK(square_free_part(from_roots({1, 1, 2})) == from_roots({1, 2}));
}

TEST_CASE("interpolation recovers the polynomial") {
  const Polynomial p = poly({Rational(1, 2), -3, 0, 2});
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= 3; ++i) {
    xs.emplace_back(i);
    ys.push_back(p(Rational(i)));
  }
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("rational roots, including fractions and zero") {
  const Polynomial p = from_roots({Rational(1, 2), Rational(-2, 3), 0, 4}) * poly({2, 0, 1});
  const auto roots = rational_roots(p);
  CHECK(roots == std::vector<Rational>{Rational(-2, 3), 0, Rational(1, 2), 4});
  CHECK(rational_roots(poly({-2, 0, 1})).empty());
  CHECK(rational_roots(poly({3})).empty());
}

TEST_CASE("Sturm isolation separates irrational roots") {
  const Polynomial p = poly({-2, 0, 1}) * poly({-1, 1});  // roots -sqrt2, 1, sqrt2
  CHECK(count_real_roots(p, Rational(-10), Rational(10)) == 3);
  const auto iv = isolate_real_roots(p, Rational(1, 1000));
  REQUIRE(iv.size() == 3);
  for (const auto& i : iv) {
    CHECK(i.hi - i.lo <= Rational(1, 1000));
    CHECK(count_real_roots(p, i.lo, i.hi) == 1);
  }
  CHECK(iv[0].lo < Rational(-1414, 1000));
  CHECK(iv[2].hi > Rational(1414, 1000));
  CHECK(isolate_real_roots(poly({1, 0, 1}), Rational(1, 10)).empty());
}
