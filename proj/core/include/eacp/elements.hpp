#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eacp/algebra.hpp"
#include "eacp/linalg.hpp"
#include "eacp/polynomial.hpp"

namespace eacp {

/// Absolute nilpotents (x^2 = 0): the whole hyperplane u = 0, plus the
/// points (x, u) with u != 0 and x in `extra_set`, where `extra_set` solves
/// sum_i a_ij x_i = 0 for all j together with b(x) = 0.
struct NilpotentSetReport {
  bool hyperplane_u0 = true;
  bool det_a_nonzero = false;
  AffineSolutionSet extra_set;

  [[nodiscard]] bool contains(const AlgebraElement& x) const;
};

NilpotentSetReport absolute_nilpotents(const Algebra& alg);

/// T_u with t_ij = u a_ji (i != j) and t_ii = u a_ii - 1, so that
/// T_u x = 0 is the hen part of x^2 = x at rooster coordinate u.
Matrix idempotent_system_matrix(const Algebra& alg, const Rational& u);

/// Hen coordinates of idempotents with rooster coordinate u != 0:
/// T_u x = 0 and b(x) = 1. Throws std::invalid_argument for u = 0.
AffineSolutionSet idempotents_at(const Algebra& alg, const Rational& u);

struct IdempotentFamily {
  Rational u_star;
  /// Hen coordinates; may be empty when b(x) = 1 is infeasible.
  AffineSolutionSet x_set;
};

/// Idempotents are 0 together with (x, u*) for each nonzero rational root u*
/// of det(T_u) and x in the family's set. Real roots that are not rational
/// are reported only as isolating intervals.
struct IdempotentReport {
  bool always_contains_zero = true;
  Polynomial det_poly;
  std::vector<IdempotentFamily> rational_root_families;
  std::vector<RootInterval> irrational_root_intervals;
  /// det(T_0) = (-1)^n, so this is false for every algebra; kept so that
  /// consumers can test it explicitly.
  bool identically_zero_det = false;

  /// Membership among the exactly described idempotents.
  [[nodiscard]] bool contains(const AlgebraElement& x) const;
};

/// Default isolating-interval width is 2^-32.
IdempotentReport idempotents(const Algebra& alg);
IdempotentReport idempotents(const Algebra& alg, const Rational& max_width);

/// Proof that M y = rhs has no solution: y^T M = 0 while y . rhs != 0.
struct InconsistencyCertificate {
  /// "hens" (e h_j = h_j, unknown: rooster coordinate of e) or
  /// "rooster" (e r = r, unknowns: hen coordinates of e).
  std::string system;
  Matrix coefficients;
  Vector rhs;
  Vector multipliers;

  [[nodiscard]] bool verify() const;
  /// Human-readable contradiction, e.g. "0 = 1".
  [[nodiscard]] std::string contradiction() const;
};

struct UnitSearchResult {
  std::optional<AlgebraElement> unit;
  InconsistencyCertificate certificate;
};

/// Solves e x = x on the natural basis. Never succeeds; throws
/// InternalInconsistency if a unit is found.
UnitSearchResult find_unit(const Algebra& alg);

/// Exact solution set of a x = target in coordinates (x_1, ..., x_n, u).
AffineSolutionSet solve_ax_eq_b(const Algebra& alg, const AlgebraElement& a,
                                const AlgebraElement& target);

struct DivisionWitness {
  AlgebraElement target;
  std::size_t rank_core = 0;
  std::size_t rank_augmented = 0;
};

/// A target for which a x = target is unsolvable. Throws
/// std::invalid_argument for a = 0.
DivisionWitness division_witness(const Algebra& alg, const AlgebraElement& a);

/// Whether span{h_1, ..., h_m, r} is closed under multiplication.
/// Throws std::invalid_argument unless 1 <= m <= n.
bool is_coordinate_subalgebra(const Algebra& alg, std::size_t m);

}  // namespace eacp
