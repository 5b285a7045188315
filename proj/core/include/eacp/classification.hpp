#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eacp/algebra.hpp"
#include "eacp/linalg.hpp"
#include "eacp/operators.hpp"

namespace eacp {

enum class ClassKind {
  abelian,
  dim2_c1,  // h r = h
  dim2_c2,  // h r = (h + r) / 2, the sex differentiation algebra
  dim3_c1,  // h1 r = r
  dim3_c2,  // h1 r = h2
  dim3_c3,  // h1 r = h1 + r
  unclassified,
};

struct ClassLabel {
  ClassKind kind = ClassKind::unclassified;
  /// Machine-readable reason, set only for unclassified.
  std::string reason;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// "Abelian", "Dim2_C1", ..., "Unclassified(<reason>)".
std::string to_string(const ClassLabel& label);

/// Canonical representative of a class; `n` is only used for abelian.
Algebra canonical_algebra(ClassKind kind, std::size_t n = 1);

/// Invertible map whose columns are the canonical basis of `target`
/// written in the natural basis of the classified algebra.
struct BasisChange {
  LinearMap map;
  ClassLabel target;
};

struct InvariantSignature {
  bool c2c2_zero = false;
  bool nilpotent = false;
  std::size_t dim_c2 = 0;

  friend bool operator==(const InvariantSignature&,
                         const InvariantSignature&) = default;
};

/// The seven shapes of h_1 r after normalizing its nonzero coefficients:
/// (i) r, (ii) h2, (iii) h1 + r, (iv) h2 + r, (v) h1 + h2 + r, (vi) h1,
/// (vii) h1 + h2.
enum class ProductPattern { i = 1, ii, iii, iv, v, vi, vii };
std::string to_string(ProductPattern p);

struct Classification {
  ClassLabel label;
  std::optional<BasisChange> change;
  InvariantSignature signature;
  /// Set for three-dimensional algebras with dim C^2 = 1.
  std::optional<ProductPattern> pattern;
  std::optional<Rational> proportionality;
  std::vector<std::string> notes;
};

std::size_t dim_c_squared(const Algebra& alg);
/// Nilpotency is tested up to chain length max_k.
InvariantSignature invariant_signature(const Algebra& alg, unsigned max_k = 6);

/// Throws DimensionError unless n = 1.
Classification classify_dim2(const Algebra& alg);
/// Throws DimensionError unless n = 2. Throws InternalInconsistency when the
/// constructive and invariant classifiers disagree or a basis change fails
/// verification.
Classification classify_dim3(const Algebra& alg);
/// Dispatches on n; n >= 3 is unclassified unless abelian.
Classification classify(const Algebra& alg);

/// Multiplication table in a new basis (the columns of `p`).
struct TransportResult {
  /// products[i][j] = e'_i e'_j in new coordinates.
  std::vector<std::vector<Vector>> products;
  bool is_eacp = false;
  /// Structure constants read off the new table when is_eacp.
  std::optional<StructuralMatrix> structure;
};

/// Throws std::domain_error when `p` is singular.
TransportResult transport(const Algebra& alg, const LinearMap& p);

/// True iff p is invertible and p(xy) = p(x) p(y) on all basis pairs of
/// `from`, with the products on the right taken in `to`.
bool verify_isomorphism(const Algebra& from, const Algebra& to,
                        const LinearMap& p);

}  // namespace eacp
