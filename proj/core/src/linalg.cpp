#include "eacp/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace eacp {

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v = zero_vector(n);
  v.at(k) = Rational(1);
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("vector size mismatch");
}

}  // namespace

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_size(a.size(), b.size());
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_size(a.size(), b.size());
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Rational& s, std::span<const Rational> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_size(a.size(), b.size());
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  return from_rows(cols).transpose();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::flatten() const { return data_; }

Matrix Matrix::unflatten(std::span<const Rational> v, std::size_t rows,
                         std::size_t cols) {
  if (v.size() != rows * cols) {
    throw std::invalid_argument("Matrix::unflatten: size mismatch");
  }
  Matrix m(rows, cols);
  m.data_.assign(v.begin(), v.end());
  return m;
}

bool Matrix::is_zero() const { return eacp::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

Vector operator*(const Matrix& m, std::span<const Rational> v) {
  if (m.cols_ != v.size()) throw std::invalid_argument("matrix shape mismatch");
  Vector out = zero_vector(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        std::swap(m(r, k), m(pivot_row, k));
      }
    }
    const Rational inv = Rational(1) / m(pivot_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, c).is_zero()) continue;
      const Rational factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(pivot_row, k).is_zero()) m(i, k) -= factor * m(pivot_row, k);
      }
    }
    e.pivots.push_back(c);
    ++pivot_row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Rational determinant(const Matrix& input) {
  if (input.rows() != input.cols()) {
    throw std::invalid_argument("determinant: matrix not square");
  }
  Matrix m = input;
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m(r, c).is_zero()) ++r;
    if (r == n) return Rational(0);
    if (r != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(r, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = Rational(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational factor = m(i, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(i, k) -= factor * m(c, k);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  const Echelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) {
    throw std::domain_error("inverse: matrix is singular");
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  }
  return out;
}

std::vector<Vector> nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols());
    v[f] = Rational(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      v[e.pivots[i]] = -e.reduced(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vs) {
  Subspace s(ambient);
  if (vs.empty()) return s;
  for (const auto& v : vs) {
    if (v.size() != ambient) {
      throw std::invalid_argument("Subspace::span: vector size mismatch");
    }
  }
  const Echelon e = rref(Matrix::from_rows(vs));
  for (std::size_t i = 0; i < e.rank(); ++i) {
    s.basis_.push_back(e.reduced.row(i));
  }
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < ambient; ++k) {
    vs.push_back(unit_vector(ambient, k));
  }
  return span(ambient, vs);
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) return false;
  // Reduce v against the echelon basis; the leading entry of each basis row
  // is 1 and no other basis row has a nonzero there.
  Vector rem(v.begin(), v.end());
  for (const auto& row : basis_) {
    std::size_t lead = 0;
    while (row[lead].is_zero()) ++lead;
    if (rem[lead].is_zero()) continue;
    const Rational factor = rem[lead];
    for (std::size_t k = lead; k < ambient_; ++k) rem[k] -= factor * row[k];
  }
  return eacp::is_zero(rem);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace Subspace::plus(const Subspace& other) const {
  std::vector<Vector> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, vs);
}

bool AffineSolutionSet::contains(std::span<const Rational> p) const {
  if (!particular || p.size() != ambient_dim) return false;
  return Subspace::span(ambient_dim, kernel_basis)
      .contains(subtract(p, *particular));
}

Vector AffineSolutionSet::point(std::span<const Rational> coeffs) const {
  if (!particular) throw std::logic_error("empty solution set has no points");
  if (coeffs.size() != kernel_basis.size()) {
    throw std::invalid_argument("AffineSolutionSet::point: wrong coeff count");
  }
  Vector p = *particular;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    p = add(p, scale(coeffs[k], kernel_basis[k]));
  }
  return p;
}

AffineSolutionSet solve(const Matrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) {
    throw std::invalid_argument("solve: rhs size mismatch");
  }
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  const Echelon e = rref(std::move(aug));
  AffineSolutionSet out;
  out.ambient_dim = n;
  if (!e.pivots.empty() && e.pivots.back() == n) return out;
  Vector p = zero_vector(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    p[e.pivots[i]] = e.reduced(i, n);
  }
  out.particular = std::move(p);
  out.kernel_basis = Subspace::span(n, nullspace(m)).basis();
  return out;
}

std::optional<Vector> farkas_certificate(const Matrix& m,
                                         std::span<const Rational> rhs) {
  for (const auto& y : nullspace(m.transpose())) {
    if (!dot(y, rhs).is_zero()) return y;
  }
  return std::nullopt;
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace eacp
