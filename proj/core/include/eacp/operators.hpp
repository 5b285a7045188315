#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eacp/algebra.hpp"
#include "eacp/linalg.hpp"

namespace eacp {

/// Matrix of a linear map on coordinates (x_1, ..., x_n, u).
using LinearMap = Matrix;

/// y -> x y. Left and right multiplication coincide.
LinearMap left_mul(const Algebra& alg, const AlgebraElement& x);

/// Rank of span{L_{h_1}, ..., L_{h_n}, L_r}.
std::size_t left_span_dimension(const Algebra& alg);

struct CompositionReport {
  bool holds = true;
  std::size_t chains_checked = 0;       // L_{i_m} ... L_{i_1}, m = 2..4
  std::size_t rooster_after_hen = 0;    // L_r L_i
  std::size_t hen_after_rooster = 0;    // L_i L_r at sampled points
  std::vector<std::string> violations;
};

/// Checks, exactly:
///   L_{i_m} ... L_{i_1} = 2^-(m-1) prod_{j<m} b_{i_j} L_{i_m} (m <= 4),
///   L_r L_i = 1/2 sum_j a_ij L_j,
///   L_i L_r (x) = b(x)/2 h_i r on basis and `samples` random points.
CompositionReport verify_composition_relations(const Algebra& alg,
                                               std::size_t samples,
                                               std::uint64_t seed);

/// Maps commuting with every multiplication operator, as a canonical
/// (row-reduced, row-major flattened) basis.
struct CentroidBasis {
  std::size_t dim = 0;
  std::vector<LinearMap> basis;
};

CentroidBasis centroid_basis(const Algebra& alg);
bool is_centroidal(const Algebra& alg);

struct EnvelopingResult {
  std::size_t dim = 0;
  /// Longest product length whose span was computed.
  unsigned length = 0;
  /// Span of products of length <= length equals that of length - 1.
  bool stabilized = false;
};

/// Dimension of the span of all compositions of multiplication operators of
/// length 1..max_length, stopping early once the span stops growing.
EnvelopingResult enveloping_dimension(const Algebra& alg, unsigned max_length);

}  // namespace eacp
