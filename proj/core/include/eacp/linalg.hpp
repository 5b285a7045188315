#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eacp/rational.hpp"

namespace eacp {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Rational> v);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& s, std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Rows must all have the same length; throws std::invalid_argument.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] Matrix transpose() const;
  /// Row-major flattening, length rows*cols.
  [[nodiscard]] Vector flatten() const;
  static Matrix unflatten(std::span<const Rational> v, std::size_t rows,
                          std::size_t cols);
  [[nodiscard]] bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix m);
  friend Vector operator*(const Matrix& m, std::span<const Rational> v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);

/// A linear subspace of K^ambient kept as the nonzero rows of its reduced
/// row echelon form, so equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vs);
  static Subspace whole(std::size_t ambient);

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] bool is_zero() const { return basis_.empty(); }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  [[nodiscard]] Subspace plus(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

/// Solution set of a linear system: particular point plus the span of a
/// canonical kernel basis. Empty iff `particular` is absent.
struct AffineSolutionSet {
  std::size_t ambient_dim = 0;
  std::optional<Vector> particular;
  std::vector<Vector> kernel_basis;

  [[nodiscard]] bool empty() const { return !particular.has_value(); }
  [[nodiscard]] std::size_t dimension() const { return kernel_basis.size(); }
  [[nodiscard]] bool contains(std::span<const Rational> point) const;
  /// particular + sum_k coeffs[k] * kernel_basis[k].
  [[nodiscard]] Vector point(std::span<const Rational> coeffs) const;
};

/// Exact solution set of m x = rhs.
AffineSolutionSet solve(const Matrix& m, std::span<const Rational> rhs);

/// A nonzero y with y^T m = 0 and y . rhs != 0 when m x = rhs is
/// inconsistent; absent otherwise.
std::optional<Vector> farkas_certificate(const Matrix& m,
                                         std::span<const Rational> rhs);

std::string to_string(std::span<const Rational> v);

}  // namespace eacp
