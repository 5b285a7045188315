#include "eacp/algebra.hpp"

#include <sstream>

namespace eacp {

AlgebraElement::AlgebraElement(Vector h, Rational u)
    : h_(std::move(h)), u_(std::move(u)) {}

AlgebraElement AlgebraElement::zero(std::size_t n) {
  return {zero_vector(n), Rational(0)};
}

AlgebraElement AlgebraElement::hen(std::size_t n, std::size_t i) {
  return {unit_vector(n, i), Rational(0)};
}

AlgebraElement AlgebraElement::rooster(std::size_t n) {
  return {zero_vector(n), Rational(1)};
}

AlgebraElement AlgebraElement::from_coords(std::span<const Rational> coords) {
  if (coords.empty()) throw DimensionError("element needs n + 1 >= 2 coordinates");
  return {Vector(coords.begin(), coords.end() - 1), coords.back()};
}

Vector AlgebraElement::coords() const {
  Vector c = h_;
  c.push_back(u_);
  return c;
}

bool AlgebraElement::is_zero() const { return eacp::is_zero(h_) && u_.is_zero(); }

std::string AlgebraElement::to_string() const { return eacp::to_string(coords()); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.n() != n()) throw DimensionError("element dimension mismatch");
  for (std::size_t i = 0; i < h_.size(); ++i) h_[i] += o.h_[i];
  u_ += o.u_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.n() != n()) throw DimensionError("element dimension mismatch");
  for (std::size_t i = 0; i < h_.size(); ++i) h_[i] -= o.h_[i];
  u_ -= o.u_;
  return *this;
}

AlgebraElement operator*(const Rational& s, AlgebraElement x) {
  for (auto& c : x.h_) c *= s;
  x.u_ *= s;
  return x;
}

AlgebraElement AlgebraElement::operator-() const { return Rational(-1) * *this; }

Algebra::Algebra(StructuralMatrix m) : m_(std::move(m)) {
  const std::size_t n = m_.n();
  if (n == 0) throw DimensionError("algebra needs at least one hen type");
  if (m_.a.rows() != n || m_.a.cols() != n) {
    throw DimensionError("A must be " + std::to_string(n) + "x" +
                         std::to_string(n) + " to match b");
  }
  det_a_ = determinant(m_.a);
  for (std::size_t k = 0; k <= n; ++k) {
    const AlgebraElement ek = basis(k);
    std::vector<Vector> cols;
    for (std::size_t c = 0; c <= n; ++c) {
      cols.push_back(multiply(*this, ek, basis(c)).coords());
    }
    left_.push_back(Matrix::from_columns(cols));
  }
}

Algebra Algebra::from_rows(const std::vector<Vector>& a, const Vector& b) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw DimensionError("A must be square");
  }
  return Algebra(StructuralMatrix{a.empty() ? Matrix() : Matrix::from_rows(a), b});
}

AlgebraElement Algebra::basis(std::size_t k) const {
  if (k > n()) throw DimensionError("basis index out of range");
  return k < n() ? AlgebraElement::hen(n(), k) : AlgebraElement::rooster(n());
}

AlgebraElement Algebra::hen_rooster_product(std::size_t i) const {
  return multiply(*this, basis(i), basis(n()));
}

Algebra new_algebra(StructuralMatrix m) { return Algebra(std::move(m)); }

namespace {

void require_dim(const Algebra& alg, const AlgebraElement& x) {
  if (x.n() != alg.n()) {
    throw DimensionError("element has " + std::to_string(x.n()) +
                         " hen coordinates, algebra has " +
                         std::to_string(alg.n()));
  }
}

}  // namespace

AlgebraElement multiply(const Algebra& alg, const AlgebraElement& x,
                        const AlgebraElement& y) {
  require_dim(alg, x);
  require_dim(alg, y);
  const std::size_t n = alg.n();
  const Rational& u = x.u();
  const Rational& v = y.u();
  // w_i = v x_i + u y_i
  Vector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = v * x.h()[i] + u * y.h()[i];
  const Rational half(1, 2);
  Vector h(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!w[i].is_zero()) acc += w[i] * alg.a()(i, j);
    }
    h[j] = half * acc;
  }
  return {std::move(h), half * dot(w, alg.b())};
}

AlgebraElement square(const Algebra& alg, const AlgebraElement& x) {
  require_dim(alg, x);
  const std::size_t n = alg.n();
  const Rational& u = x.u();
  if (u.is_zero()) return AlgebraElement::zero(n);
  Vector h(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x.h()[i].is_zero()) acc += x.h()[i] * alg.a()(i, j);
    }
    h[j] = u * acc;
  }
  return {std::move(h), u * dot(x.h(), alg.b())};
}

Rational b_functional(const Algebra& alg, const AlgebraElement& x) {
  require_dim(alg, x);
  return dot(alg.b(), x.h());
}

bool is_bisexual_special_case(const Algebra& alg) {
  for (std::size_t i = 0; i < alg.n(); ++i) {
    if (alg.b()[i] != Rational(1)) return false;
    Rational row_sum(0);
    for (std::size_t j = 0; j < alg.n(); ++j) row_sum += alg.a()(i, j);
    if (row_sum != Rational(1)) return false;
  }
  return true;
}

AlgebraElement plenary_power(const Algebra& alg, const AlgebraElement& x,
                             unsigned k) {
  require_dim(alg, x);
  AlgebraElement p = x;
  for (unsigned i = 0; i < k; ++i) p = square(alg, p);
  return p;
}

AlgebraElement principal_power(const Algebra& alg, const AlgebraElement& x,
                               unsigned k) {
  if (k == 0) throw std::invalid_argument("principal_power: k must be >= 1");
  require_dim(alg, x);
  AlgebraElement p = x;
  for (unsigned i = 1; i < k; ++i) p = multiply(alg, p, x);
  return p;
}

}  // namespace eacp
