#include "eacp/operators.hpp"

#include <sstream>

#include "eacp/sampling.hpp"

namespace eacp {

LinearMap left_mul(const Algebra& alg, const AlgebraElement& x) {
  if (x.n() != alg.n()) throw DimensionError("element dimension mismatch");
  LinearMap out(alg.dim(), alg.dim());
  const Vector c = x.coords();
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    if (!c[k].is_zero()) out += c[k] * alg.basis_left_mul(k);
  }
  return out;
}

std::size_t left_span_dimension(const Algebra& alg) {
  std::vector<Vector> flat;
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    flat.push_back(alg.basis_left_mul(k).flatten());
  }
  return Subspace::span(alg.dim() * alg.dim(), flat).dim();
}

namespace {

std::string tuple_name(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  for (std::size_t j = idx.size(); j-- > 0;) {
    os << "L" << idx[j] + 1;
    if (j) os << "*";
  }
  return os.str();
}

}  // namespace

CompositionReport verify_composition_relations(const Algebra& alg,
                                               std::size_t samples,
                                               std::uint64_t seed) {
  const std::size_t n = alg.n();
  const Rational half(1, 2);
  const LinearMap& lr = alg.basis_left_mul(n);
  CompositionReport report;

  // L_{i_m} ... L_{i_1} = 2^-(m-1) prod_{j<m} b_{i_j} L_{i_m}, extended one
  // factor at a time from the length m - 1 chains.
  struct Chain {
    std::vector<std::size_t> idx;
    LinearMap product;
  };
  std::vector<Chain> level;
  for (std::size_t i = 0; i < n; ++i) level.push_back({{i}, alg.basis_left_mul(i)});
  for (unsigned m = 2; m <= 4; ++m) {
    std::vector<Chain> next;
    for (const auto& c : level) {
      for (std::size_t i = 0; i < n; ++i) {
        Chain ext{c.idx, alg.basis_left_mul(i) * c.product};
        ext.idx.push_back(i);
        Rational coeff = pow(half, m - 1);
        for (std::size_t j = 0; j + 1 < ext.idx.size(); ++j) {
          coeff *= alg.b()[ext.idx[j]];
        }
        ++report.chains_checked;
        if (ext.product != coeff * alg.basis_left_mul(i)) {
          report.violations.push_back("chain " + tuple_name(ext.idx));
        }
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }

  // L_r L_i = 1/2 sum_j a_ij L_j.
  for (std::size_t i = 0; i < n; ++i) {
    LinearMap rhs(alg.dim(), alg.dim());
    for (std::size_t j = 0; j < n; ++j) {
      if (!alg.a()(i, j).is_zero()) {
        rhs += (half * alg.a()(i, j)) * alg.basis_left_mul(j);
      }
    }
    ++report.rooster_after_hen;
    if (lr * alg.basis_left_mul(i) != rhs) {
      report.violations.push_back("Lr*L" + std::to_string(i + 1));
    }
  }

  // L_i L_r (x) = b(x)/2 h_i r.
  std::vector<AlgebraElement> points;
  for (std::size_t k = 0; k < alg.dim(); ++k) points.push_back(alg.basis(k));
  ElementSampler sampler(seed);
  for (std::size_t s = 0; s < samples; ++s) points.push_back(sampler.next(n));
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraElement hir = alg.hen_rooster_product(i);
    for (const auto& x : points) {
      const AlgebraElement lhs =
          multiply(alg, alg.basis(i), multiply(alg, alg.basis(n), x));
      ++report.hen_after_rooster;
      if (lhs != (half * b_functional(alg, x)) * hir) {
        report.violations.push_back("L" + std::to_string(i + 1) + "*Lr at " +
                                    x.to_string());
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

CentroidBasis centroid_basis(const Algebra& alg) {
  const std::size_t d = alg.dim();
  // Unknown T flattened row-major: index p * d + q holds T(p, q).
  // (T L - L T)(p, q) = sum_k T(p, k) L(k, q) - sum_k L(p, k) T(k, q).
  std::vector<Vector> rows;
  for (std::size_t g = 0; g < d; ++g) {
    const LinearMap& l = alg.basis_left_mul(g);
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = 0; q < d; ++q) {
        Vector row = zero_vector(d * d);
        for (std::size_t k = 0; k < d; ++k) {
          row[p * d + k] += l(k, q);
          row[k * d + q] -= l(p, k);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Vector> kernel;
  if (rows.empty()) {
    kernel = Subspace::whole(d * d).basis();
  } else {
    kernel = Subspace::span(d * d, nullspace(Matrix::from_rows(rows))).basis();
  }
  CentroidBasis out;
  out.dim = kernel.size();
  for (const auto& v : kernel) out.basis.push_back(Matrix::unflatten(v, d, d));
  return out;
}

bool is_centroidal(const Algebra& alg) { return centroid_basis(alg).dim == 1; }

EnvelopingResult enveloping_dimension(const Algebra& alg, unsigned max_length) {
  if (max_length == 0) throw std::invalid_argument("max_length must be >= 1");
  const std::size_t d = alg.dim();
  const std::size_t flat = d * d;
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < d; ++k) gens.push_back(alg.basis_left_mul(k).flatten());

  EnvelopingResult result;
  Subspace level = Subspace::span(flat, gens);
  Subspace total = level;
  result.length = 1;
  result.stabilized = total.is_zero();
  while (!result.stabilized && result.length < max_length) {
    std::vector<Vector> products;
    for (std::size_t k = 0; k < d; ++k) {
      for (const auto& w : level.basis()) {
        products.push_back(
            (alg.basis_left_mul(k) * Matrix::unflatten(w, d, d)).flatten());
      }
    }
    level = Subspace::span(flat, products);
    Subspace grown = total.plus(level);
    ++result.length;
    result.stabilized = grown == total;
    total = std::move(grown);
  }
  result.dim = total.dim();
  return result;
}

}  // namespace eacp
