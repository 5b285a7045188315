#include "eacp/elements.hpp"

#include <sstream>

#include "eacp/operators.hpp"

namespace eacp {

bool NilpotentSetReport::contains(const AlgebraElement& x) const {
  if (x.u().is_zero()) return hyperplane_u0;
  return extra_set.contains(x.h());
}

NilpotentSetReport absolute_nilpotents(const Algebra& alg) {
  const std::size_t n = alg.n();
  // Rows j = 0..n-1: sum_i a_ij x_i; row n: sum_i b_i x_i.
  Matrix system(n + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) system(j, i) = alg.a()(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) system(n, i) = alg.b()[i];
  NilpotentSetReport report;
  report.det_a_nonzero = !alg.det_a().is_zero();
  report.extra_set = solve(system, zero_vector(n + 1));
  return report;
}

Matrix idempotent_system_matrix(const Algebra& alg, const Rational& u) {
  const std::size_t n = alg.n();
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = u * alg.a()(j, i);
      if (i == j) t(i, j) -= Rational(1);
    }
  }
  return t;
}

AffineSolutionSet idempotents_at(const Algebra& alg, const Rational& u) {
  if (u.is_zero()) {
    throw std::invalid_argument("idempotents_at: rooster coordinate must be nonzero");
  }
  const std::size_t n = alg.n();
  const Matrix t = idempotent_system_matrix(alg, u);
  Matrix system(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) system(i, j) = t(i, j);
    system(n, i) = alg.b()[i];
  }
  Vector rhs = zero_vector(n + 1);
  rhs[n] = Rational(1);
  return solve(system, rhs);
}

bool IdempotentReport::contains(const AlgebraElement& x) const {
  if (x.is_zero()) return always_contains_zero;
  for (const auto& f : rational_root_families) {
    if (f.u_star == x.u()) return f.x_set.contains(x.h());
  }
  return false;
}

IdempotentReport idempotents(const Algebra& alg) {
  return idempotents(alg, Rational(mpz_class(1), mpz_class(1) << 32));
}

IdempotentReport idempotents(const Algebra& alg, const Rational& max_width) {
  const std::size_t n = alg.n();
  // det(T_u) has degree <= n; recover it from n + 1 exact evaluations.
  std::vector<Rational> us, dets;
  for (std::size_t k = 0; k <= n; ++k) {
    us.emplace_back(static_cast<std::int64_t>(k));
    dets.push_back(determinant(idempotent_system_matrix(alg, us.back())));
  }
  IdempotentReport report;
  report.det_poly = interpolate(us, dets);
  report.identically_zero_det = report.det_poly.is_zero();
  if (report.identically_zero_det) {
    throw InternalInconsistency("det(T_u) vanished identically although det(T_0) != 0");
  }

  Polynomial rest = square_free_part(report.det_poly);
  for (const auto& root : rational_roots(report.det_poly)) {
    if (root.is_zero()) continue;
    report.rational_root_families.push_back({root, idempotents_at(alg, root)});
    rest = divmod(rest, Polynomial::x() - Polynomial::constant(root)).first;
  }
  if (rest.degree() > 0) {
    report.irrational_root_intervals = isolate_real_roots(rest, max_width);
  }
  return report;
}

bool InconsistencyCertificate::verify() const {
  if (multipliers.size() != coefficients.rows() || rhs.size() != coefficients.rows()) {
    return false;
  }
  if (is_zero(multipliers)) return false;
  const Vector combo = coefficients.transpose() * multipliers;
  return is_zero(combo) && !dot(multipliers, rhs).is_zero();
}

std::string InconsistencyCertificate::contradiction() const {
  std::ostringstream os;
  os << system << ": combining equations with multipliers "
     << to_string(multipliers) << " gives 0 = " << dot(multipliers, rhs);
  return os.str();
}

UnitSearchResult find_unit(const Algebra& alg) {
  const std::size_t n = alg.n();
  const std::size_t d = alg.dim();
  const Matrix& lr = alg.basis_left_mul(n);

  // e h_j = h_j for all j. Only the rooster coordinate beta of e
  // contributes: beta (r h_j) = h_j, one column, d rows per hen.
  Matrix on_hens(n * d, 1);
  Vector on_hens_rhs = zero_vector(n * d);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < d; ++k) on_hens(j * d + k, 0) = lr(k, j);
    on_hens_rhs[j * d + j] = Rational(1);
  }
  // e r = r. Only the hen coordinates alpha of e contribute:
  // sum_i alpha_i (h_i r) = r.
  std::vector<Vector> on_rooster_cols;
  for (std::size_t i = 0; i < n; ++i) {
    on_rooster_cols.push_back(alg.hen_rooster_product(i).coords());
  }
  const Matrix on_rooster = Matrix::from_columns(on_rooster_cols);
  const Vector on_rooster_rhs = unit_vector(d, n);

  UnitSearchResult result;
  if (auto y = farkas_certificate(on_hens, on_hens_rhs)) {
    result.certificate = {"hens", on_hens, on_hens_rhs, std::move(*y)};
    return result;
  }
  if (auto y = farkas_certificate(on_rooster, on_rooster_rhs)) {
    result.certificate = {"rooster", on_rooster, on_rooster_rhs, std::move(*y)};
    return result;
  }
  const auto beta = solve(on_hens, on_hens_rhs);
  const auto alpha = solve(on_rooster, on_rooster_rhs);
  AlgebraElement unit(*alpha.particular, beta.particular->front());
  throw InternalInconsistency("unit element found: " + unit.to_string());
}

AffineSolutionSet solve_ax_eq_b(const Algebra& alg, const AlgebraElement& a,
                                const AlgebraElement& target) {
  if (target.n() != alg.n()) throw DimensionError("target dimension mismatch");
  return solve(left_mul(alg, a), target.coords());
}

DivisionWitness division_witness(const Algebra& alg, const AlgebraElement& a) {
  if (a.n() != alg.n()) throw DimensionError("element dimension mismatch");
  if (a.is_zero()) throw std::invalid_argument("division_witness: a must be nonzero");
  const Matrix la = left_mul(alg, a);
  const std::size_t core = rank(la);
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < la.cols(); ++c) cols.push_back(la.column(c));
  const Subspace columns = Subspace::span(alg.dim(), cols);
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    Vector e = unit_vector(alg.dim(), k);
    if (columns.contains(e)) continue;
    cols.push_back(e);
    const std::size_t augmented = rank(Matrix::from_columns(cols));
    return {AlgebraElement::from_coords(e), core, augmented};
  }
  throw InternalInconsistency("left multiplication by " + a.to_string() +
                              " is invertible");
}

bool is_coordinate_subalgebra(const Algebra& alg, std::size_t m) {
  if (m < 1 || m > alg.n()) {
    throw std::invalid_argument("coordinate subalgebra size must be in [1, n]");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = m; j < alg.n(); ++j) {
      if (!alg.a()(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace eacp
