#include "eacp/classification.hpp"

#include "eacp/identities.hpp"

namespace eacp {

std::string to_string(const ClassLabel& label) {
  switch (label.kind) {
    case ClassKind::abelian: return "Abelian";
    case ClassKind::dim2_c1: return "Dim2_C1";
    case ClassKind::dim2_c2: return "Dim2_C2";
    case ClassKind::dim3_c1: return "Dim3_C1";
    case ClassKind::dim3_c2: return "Dim3_C2";
    case ClassKind::dim3_c3: return "Dim3_C3";
    case ClassKind::unclassified: return "Unclassified(" + label.reason + ")";
  }
  return "unknown";
}

std::string to_string(ProductPattern p) {
  static const char* names[] = {"(i)", "(ii)", "(iii)", "(iv)",
                                "(v)", "(vi)", "(vii)"};
  return names[static_cast<int>(p) - 1];
}

namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return {num, den}; }

}  // namespace

Algebra canonical_algebra(ClassKind kind, std::size_t n) {
  switch (kind) {
    case ClassKind::abelian:
      return Algebra(StructuralMatrix{Matrix(n, n), zero_vector(n)});
    case ClassKind::dim2_c1:
      return Algebra::from_rows({{q(2)}}, {q(0)});
    case ClassKind::dim2_c2:
      return Algebra::from_rows({{q(1)}}, {q(1)});
    case ClassKind::dim3_c1:
      return Algebra::from_rows({{q(0), q(0)}, {q(0), q(0)}}, {q(2), q(0)});
    case ClassKind::dim3_c2:
      return Algebra::from_rows({{q(0), q(2)}, {q(0), q(0)}}, {q(0), q(0)});
    case ClassKind::dim3_c3:
      return Algebra::from_rows({{q(2), q(0)}, {q(0), q(0)}}, {q(2), q(0)});
    case ClassKind::unclassified: break;
  }
  throw std::invalid_argument("no canonical algebra for an unclassified label");
}

std::size_t dim_c_squared(const Algebra& alg) {
  std::vector<Vector> products;
  for (std::size_t i = 0; i < alg.n(); ++i) {
    products.push_back(alg.hen_rooster_product(i).coords());
  }
  return Subspace::span(alg.dim(), products).dim();
}

InvariantSignature invariant_signature(const Algebra& alg, unsigned max_k) {
  const Subspace whole = Subspace::whole(alg.dim());
  const Subspace c2 = subspace_product(alg, whole, whole);
  InvariantSignature sig;
  sig.dim_c2 = c2.dim();
  sig.c2c2_zero = subspace_product(alg, c2, c2).is_zero();
  sig.nilpotent = nilpotency_indices(alg, max_k).nilpotency.has_value();
  return sig;
}

TransportResult transport(const Algebra& alg, const LinearMap& p) {
  const std::size_t d = alg.dim();
  if (p.rows() != d || p.cols() != d) throw DimensionError("basis change has wrong size");
  const LinearMap p_inv = inverse(p);
  std::vector<AlgebraElement> fresh;
  for (std::size_t k = 0; k < d; ++k) {
    fresh.push_back(AlgebraElement::from_coords(p.column(k)));
  }
  TransportResult out;
  out.products.assign(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out.products[i][j] = p_inv * multiply(alg, fresh[i], fresh[j]).coords();
    }
  }
  const std::size_t n = alg.n();
  out.is_eacp = is_zero(out.products[n][n]);
  for (std::size_t i = 0; i < n && out.is_eacp; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(out.products[i][j])) {
        out.is_eacp = false;
        break;
      }
    }
  }
  if (out.is_eacp) {
    StructuralMatrix m{Matrix(n, n), zero_vector(n)};
    for (std::size_t i = 0; i < n; ++i) {
      const Vector& hr = out.products[i][n];
      for (std::size_t j = 0; j < n; ++j) m.a(i, j) = q(2) * hr[j];
      m.b[i] = q(2) * hr[n];
    }
    out.structure = std::move(m);
  }
  return out;
}

bool verify_isomorphism(const Algebra& from, const Algebra& to,
                        const LinearMap& p) {
  const std::size_t d = from.dim();
  if (to.dim() != d || p.rows() != d || p.cols() != d) return false;
  if (determinant(p).is_zero()) return false;
  for (std::size_t i = 0; i < d; ++i) {
    const auto pi = AlgebraElement::from_coords(p.column(i));
    for (std::size_t j = i; j < d; ++j) {
      const auto pj = AlgebraElement::from_coords(p.column(j));
      const Vector lhs = p * multiply(from, from.basis(i), from.basis(j)).coords();
      if (lhs != multiply(to, pi, pj).coords()) return false;
    }
  }
  return true;
}

namespace {

Classification finish_constructive(const Algebra& alg, ClassKind kind,
                                   LinearMap change, InvariantSignature sig) {
  const Algebra canon = canonical_algebra(kind, alg.n());
  if (!verify_isomorphism(canon, alg, change)) {
    throw InternalInconsistency("basis change to " + to_string(ClassLabel{kind, {}}) +
                                " failed verification");
  }
  Classification c;
  c.label = {kind, {}};
  c.change = BasisChange{std::move(change), c.label};
  c.signature = sig;
  return c;
}

LinearMap columns(const std::vector<Vector>& cols) { return Matrix::from_columns(cols); }

ClassKind invariant_dim2(const InvariantSignature& sig) {
  if (sig.dim_c2 == 0) return ClassKind::abelian;
  return sig.c2c2_zero ? ClassKind::dim2_c1 : ClassKind::dim2_c2;
}

std::optional<ClassKind> invariant_dim3(const InvariantSignature& sig) {
  if (sig.dim_c2 == 0) return ClassKind::abelian;
  if (sig.dim_c2 != 1) return std::nullopt;
  if (sig.c2c2_zero) return sig.nilpotent ? ClassKind::dim3_c2 : ClassKind::dim3_c1;
  if (!sig.nilpotent) return ClassKind::dim3_c3;
  throw InternalInconsistency("nilpotent algebra with C^2 C^2 != 0 and dim C^2 = 1");
}

void cross_check(const Classification& c, ClassKind invariant) {
  if (c.label.kind != invariant) {
    throw InternalInconsistency("constructive label " + to_string(c.label) +
                                " disagrees with invariant label " +
                                to_string(ClassLabel{invariant, {}}));
  }
}

// Algebra with the same products written in the basis given by `p`.
Algebra rebased(const Algebra& alg, const LinearMap& p) {
  auto t = transport(alg, p);
  if (!t.is_eacp) throw InternalInconsistency("intermediate basis change left the family");
  return Algebra(std::move(*t.structure));
}

}  // namespace

Classification classify_dim2(const Algebra& alg) {
  if (alg.n() != 1) throw DimensionError("classify_dim2 needs a 2-dimensional algebra");
  const InvariantSignature sig = invariant_signature(alg);
  const Rational a = alg.a()(0, 0);
  const Rational b = alg.b()[0];
  Classification c;
  if (a.is_zero() && b.is_zero()) {
    c = finish_constructive(alg, ClassKind::abelian, Matrix::identity(2), sig);
  } else if (b.is_zero()) {
    // h' = h, r' = (2/a) r
    c = finish_constructive(alg, ClassKind::dim2_c1,
                            columns({{q(1), q(0)}, {q(0), q(2) / a}}), sig);
  } else if (a.is_zero()) {
    // h' = r, r' = (2/b) h
    c = finish_constructive(alg, ClassKind::dim2_c1,
                            columns({{q(0), q(1)}, {q(2) / b, q(0)}}), sig);
  } else {
    // h' = r / a, r' = h / b
    c = finish_constructive(alg, ClassKind::dim2_c2,
                            columns({{q(0), q(1) / a}, {q(1) / b, q(0)}}), sig);
  }
  cross_check(c, invariant_dim2(sig));
  return c;
}

Classification classify_dim3(const Algebra& alg) {
  if (alg.n() != 2) throw DimensionError("classify_dim3 needs a 3-dimensional algebra");
  const InvariantSignature sig = invariant_signature(alg);
  if (sig.dim_c2 == 0) {
    return finish_constructive(alg, ClassKind::abelian, Matrix::identity(3), sig);
  }
  if (sig.dim_c2 == 2) {
    Classification c;
    c.label = {ClassKind::unclassified, "dim C^2 = 2"};
    c.signature = sig;
    return c;
  }

  // Make h1 r nonzero by swapping hens if necessary.
  LinearMap total = Matrix::identity(3);
  Algebra work = alg;
  if (work.hen_rooster_product(0).is_zero()) {
    total = columns({{q(0), q(1), q(0)}, {q(1), q(0), q(0)}, {q(0), q(0), q(1)}});
    work = rebased(alg, total);
  }

  // h1 r = 1/2 (a h1 + b h2 + A r). Scale h1' = l h1, h2' = m h2, r' = v r
  // so that each nonzero coefficient of h1' r' becomes 1.
  const Rational a = work.a()(0, 0);
  const Rational b = work.a()(0, 1);
  const Rational big_a = work.b()[0];
  const Rational v = a.is_zero() ? q(1) : q(2) / a;
  const Rational l = big_a.is_zero() ? q(1) : q(2) / big_a;
  const Rational m = b.is_zero() ? q(1) : l * v * b / q(2);
  const LinearMap scaling =
      columns({{l, q(0), q(0)}, {q(0), m, q(0)}, {q(0), q(0), v}});
  work = rebased(work, scaling);
  total = total * scaling;

  const Vector pattern_vec = work.hen_rooster_product(0).coords();
  const Vector second = work.hen_rooster_product(1).coords();
  const bool has_h1 = !pattern_vec[0].is_zero();
  const bool has_h2 = !pattern_vec[1].is_zero();
  const bool has_r = !pattern_vec[2].is_zero();
  ProductPattern pattern{};
  if (!has_h1 && !has_h2) pattern = ProductPattern::i;
  else if (!has_h1 && has_h2 && !has_r) pattern = ProductPattern::ii;
  else if (has_h1 && !has_h2 && has_r) pattern = ProductPattern::iii;
  else if (!has_h1 && has_h2 && has_r) pattern = ProductPattern::iv;
  else if (has_h1 && has_h2 && has_r) pattern = ProductPattern::v;
  else if (has_h1 && !has_h2 && !has_r) pattern = ProductPattern::vi;
  else pattern = ProductPattern::vii;

  std::size_t lead = 0;
  while (pattern_vec[lead].is_zero()) ++lead;
  const Rational c = second[lead];  // pattern coefficients are all 1
  if (second != scale(c, pattern_vec)) {
    throw InternalInconsistency("h2 r is not proportional to h1 r although dim C^2 = 1");
  }

  const Rational one = q(1), zero = q(0);
  std::optional<LinearMap> step;
  ClassKind target = ClassKind::unclassified;
  // Columns are h1', h2', r' in the normalized basis.
  switch (pattern) {
    case ProductPattern::i:
      target = ClassKind::dim3_c1;
      step = c.is_zero() ? Matrix::identity(3)
                         : columns({{one, zero, zero}, {-one, one / c, zero},
                                    {zero, zero, one}});
      break;
    case ProductPattern::ii:
      if (c.is_zero()) {
        target = ClassKind::dim3_c2;
        step = Matrix::identity(3);
      } else {
        target = ClassKind::dim3_c1;
        step = columns({{zero, zero, one / c}, {c, -one, zero}, {zero, one, zero}});
      }
      break;
    case ProductPattern::iii:
      target = ClassKind::dim3_c3;
      step = c.is_zero() ? Matrix::identity(3)
                         : columns({{one, zero, zero}, {-one, one / c, zero},
                                    {zero, zero, one}});
      break;
    case ProductPattern::iv:
      if (c.is_zero()) {
        target = ClassKind::dim3_c1;
        step = columns({{one, zero, zero}, {zero, one, zero}, {zero, one, one}});
      } else {
        target = ClassKind::dim3_c3;
        step = columns({{zero, one / c, zero}, {-one, one / c, zero},
                        {zero, zero, one / c}});
      }
      break;
    case ProductPattern::v:
      if (c == -one) {
        target = ClassKind::dim3_c1;
        step = columns({{one, zero, zero}, {one, one, zero}, {one, one, one}});
      } else {
        const Rational s = one / (one + c);
        target = ClassKind::dim3_c3;
        step = columns({{s, s, zero}, {-c * s, s, zero}, {zero, zero, s}});
      }
      break;
    case ProductPattern::vi:
      target = ClassKind::dim3_c1;
      step = columns({{zero, zero, one}, {c, -one, zero}, {one, zero, zero}});
      break;
    case ProductPattern::vii:
      if (c != -one) {
        target = ClassKind::dim3_c1;
        step = columns({{zero, zero, one / (one + c)}, {-c, one, zero},
                        {one, one, zero}});
      }
      break;
  }

  const auto invariant = invariant_dim3(sig);
  Classification out;
  if (step) {
    out = finish_constructive(alg, target, total * *step, sig);
  } else {
    out.label = {*invariant, {}};
    out.signature = sig;
    out.notes.push_back("no constructive basis change for pattern " +
                        to_string(pattern) + " with c = " + c.to_string() +
                        "; label from invariant signature");
  }
  out.pattern = pattern;
  out.proportionality = c;
  cross_check(out, *invariant);
  return out;
}

Classification classify(const Algebra& alg) {
  if (alg.n() == 1) return classify_dim2(alg);
  if (alg.n() == 2) return classify_dim3(alg);
  const InvariantSignature sig = invariant_signature(alg);
  if (sig.dim_c2 == 0) {
    return finish_constructive(alg, ClassKind::abelian, Matrix::identity(alg.dim()), sig);
  }
  Classification c;
  c.label = {ClassKind::unclassified, "dimension " + std::to_string(alg.dim()) + " > 3"};
  c.signature = sig;
  return c;
}

}  // namespace eacp
