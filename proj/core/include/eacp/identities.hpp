#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eacp/algebra.hpp"
#include "eacp/linalg.hpp"

namespace eacp {

enum class IdentityKind {
  associative,
  commutative,
  anticommutative,
  jacobi,
  jordan,
  alternative,
  flexible,
  power_associative,
};

/// An identity to test; max_degree only matters for power associativity
/// (x^m x^n = x^(m+n) for all m + n <= max_degree) and must be >= 3.
struct Identity {
  IdentityKind kind;
  unsigned max_degree = 6;
};

std::string to_string(IdentityKind kind);
/// Inverse of to_string; throws std::invalid_argument on an unknown name.
IdentityKind identity_kind_from_string(const std::string& name);
const std::vector<IdentityKind>& all_identity_kinds();

enum class VerdictMethod { structural, exhaustive_basis, randomized };
std::string to_string(VerdictMethod method);

/// Arguments at which the identity fails, with both sides evaluated.
struct Witness {
  std::vector<AlgebraElement> args;
  AlgebraElement lhs;
  AlgebraElement rhs;
  /// Which sub-law failed, e.g. "left" for alternativity or "m=1,n=2".
  std::string detail;
};

struct IdentityVerdict {
  bool holds = true;
  std::optional<Witness> witness;
  VerdictMethod method = VerdictMethod::randomized;
};

/// A^2 = 0 and b = 0, which is equivalent to associativity.
bool satisfies_structural_associativity(const Algebra& alg);

/// Evaluates `id` on every tuple of basis elements and then on `samples`
/// seeded random tuples, returning the first failure in that order.
/// Throws std::invalid_argument when samples == 0 or max_degree < 3, and
/// InternalInconsistency when a provably valid law fails.
IdentityVerdict check_identity(const Algebra& alg, Identity id,
                               std::size_t samples, std::uint64_t seed);

/// Re-evaluates both sides of a witness; true iff they still differ.
bool witness_reproduces(const Algebra& alg, Identity id, const Witness& w);

/// Checks (xy)z = 0 on all basis triples and `samples` random triples.
IdentityVerdict triple_products_vanish(const Algebra& alg, std::size_t samples,
                                       std::uint64_t seed);

/// Span of all products s t, s in S, t in T, in coordinates of the algebra.
Subspace subspace_product(const Algebra& alg, const Subspace& s,
                          const Subspace& t);

/// The three power chains, index k - 1 holding the k-th term:
/// derived A^(k+1) = A^(k) A^(k); right A^<k+1> = A^<k> A;
/// lower A^k = sum_{i=1}^{k-1} A^i A^(k-i).
struct PowerChains {
  std::vector<Subspace> derived;
  std::vector<Subspace> right;
  std::vector<Subspace> lower;
};
PowerChains power_chains(const Algebra& alg, unsigned max_k);

/// Minimal k <= max_k at which each chain reaches zero; absent means not
/// detected within the bound.
struct NilpotencyIndices {
  std::optional<unsigned> solvability;
  std::optional<unsigned> right_nilpotency;
  std::optional<unsigned> nilpotency;
};
/// Throws std::invalid_argument when max_k < 2.
NilpotencyIndices nilpotency_indices(const Algebra& alg, unsigned max_k);

}  // namespace eacp
