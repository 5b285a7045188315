#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "eacp/linalg.hpp"
#include "eacp/rational.hpp"

namespace eacp {

/// Raised for inputs whose dimensions do not match the algebra.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed result contradicts a proven property of these
/// algebras (for example a unit element is found). Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Structure constants: h_i r = 1/2 (sum_j a_ij h_j + b_i r).
struct StructuralMatrix {
  Matrix a;  // n x n
  Vector b;  // n

  [[nodiscard]] std::size_t n() const { return b.size(); }
  friend bool operator==(const StructuralMatrix&,
                         const StructuralMatrix&) = default;
};

/// Element sum_i x_i h_i + u r of an algebra with n hen types.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(Vector h, Rational u);
  static AlgebraElement zero(std::size_t n);
  static AlgebraElement hen(std::size_t n, std::size_t i);
  static AlgebraElement rooster(std::size_t n);
  /// Coordinates (x_1, ..., x_n, u); throws DimensionError on empty input.
  static AlgebraElement from_coords(std::span<const Rational> coords);

  [[nodiscard]] std::size_t n() const { return h_.size(); }
  [[nodiscard]] const Vector& h() const { return h_; }
  [[nodiscard]] const Rational& u() const { return u_; }
  [[nodiscard]] Vector coords() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement x);
  AlgebraElement operator-() const;
  friend bool operator==(const AlgebraElement&,
                         const AlgebraElement&) = default;

 private:
  Vector h_;
  Rational u_;
};

/// Immutable evolution algebra with hen and rooster types. Holds the structure
/// constants plus det(A) and the left-multiplication matrices of the natural
/// basis {h_1, ..., h_n, r}, ordered as coordinates (x_1, ..., x_n, u).
class Algebra {
 public:
  /// Throws DimensionError when n = 0 or A is not n x n.
  explicit Algebra(StructuralMatrix m);
  static Algebra from_rows(const std::vector<Vector>& a, const Vector& b);

  [[nodiscard]] std::size_t n() const { return m_.n(); }
  /// n + 1.
  [[nodiscard]] std::size_t dim() const { return m_.n() + 1; }
  [[nodiscard]] const StructuralMatrix& structure() const { return m_; }
  [[nodiscard]] const Matrix& a() const { return m_.a; }
  [[nodiscard]] const Vector& b() const { return m_.b; }
  [[nodiscard]] const Rational& det_a() const { return det_a_; }

  /// Basis element k: h_{k+1} for k < n, r for k = n.
  [[nodiscard]] AlgebraElement basis(std::size_t k) const;
  /// Matrix of y -> e_k y.
  [[nodiscard]] const Matrix& basis_left_mul(std::size_t k) const {
    return left_.at(k);
  }
  /// h_i r as an element (i zero-based).
  [[nodiscard]] AlgebraElement hen_rooster_product(std::size_t i) const;

  friend bool operator==(const Algebra& x, const Algebra& y) {
    return x.m_ == y.m_;
  }

 private:
  StructuralMatrix m_;
  Rational det_a_;
  std::vector<Matrix> left_;
};

Algebra new_algebra(StructuralMatrix m);

AlgebraElement multiply(const Algebra& alg, const AlgebraElement& x,
                        const AlgebraElement& y);
AlgebraElement square(const Algebra& alg, const AlgebraElement& x);
Rational b_functional(const Algebra& alg, const AlgebraElement& x);
bool is_bisexual_special_case(const Algebra& alg);
/// x^[0] = x, x^[k] = (x^[k-1])^2.
AlgebraElement plenary_power(const Algebra& alg, const AlgebraElement& x,
                             unsigned k);
/// Right-normed: x^1 = x, x^k = x^(k-1) x. Throws for k = 0.
AlgebraElement principal_power(const Algebra& alg, const AlgebraElement& x,
                               unsigned k);

}  // namespace eacp
