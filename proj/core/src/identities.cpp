#include "eacp/identities.hpp"

#include <functional>
#include <stdexcept>
#include <tuple>

#include "eacp/sampling.hpp"

namespace eacp {

std::string to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::associative: return "associative";
    case IdentityKind::commutative: return "commutative";
    case IdentityKind::anticommutative: return "anticommutative";
    case IdentityKind::jacobi: return "jacobi";
    case IdentityKind::jordan: return "jordan";
    case IdentityKind::alternative: return "alternative";
    case IdentityKind::flexible: return "flexible";
    case IdentityKind::power_associative: return "power_associative";
  }
  return "unknown";
}

IdentityKind identity_kind_from_string(const std::string& name) {
  for (auto k : all_identity_kinds()) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown identity '" + name + "'");
}

const std::vector<IdentityKind>& all_identity_kinds() {
  static const std::vector<IdentityKind> kinds{
      IdentityKind::associative,     IdentityKind::commutative,
      IdentityKind::anticommutative, IdentityKind::jacobi,
      IdentityKind::jordan,          IdentityKind::alternative,
      IdentityKind::flexible,        IdentityKind::power_associative};
  return kinds;
}

std::string to_string(VerdictMethod method) {
  switch (method) {
    case VerdictMethod::structural: return "structural";
    case VerdictMethod::exhaustive_basis: return "exhaustive_basis";
    case VerdictMethod::randomized: return "randomized";
  }
  return "unknown";
}

bool satisfies_structural_associativity(const Algebra& alg) {
  if (!is_zero(alg.b())) return false;
  return (alg.a() * alg.a()).is_zero();
}

namespace {

using Args = std::vector<AlgebraElement>;

std::size_t arity(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::associative:
    case IdentityKind::jacobi: return 3;
    case IdentityKind::power_associative: return 1;
    default: return 2;
  }
}

// Laws that are multilinear, so basis tuples decide them exactly.
bool multilinear(IdentityKind kind) {
  return kind == IdentityKind::associative ||
         kind == IdentityKind::commutative ||
         kind == IdentityKind::anticommutative ||
         kind == IdentityKind::jacobi;
}

// Implied by A^2 = 0, b = 0 (all triple products vanish).
bool implied_by_associativity(IdentityKind kind) {
  return kind == IdentityKind::associative ||
         kind == IdentityKind::alternative ||
         kind == IdentityKind::power_associative ||
         kind == IdentityKind::jacobi || kind == IdentityKind::jordan;
}

// Hold in every algebra of this family.
bool always_holds(IdentityKind kind) {
  return kind == IdentityKind::commutative || kind == IdentityKind::flexible;
}

std::optional<Witness> mismatch(const Args& args, AlgebraElement lhs,
                                AlgebraElement rhs, std::string detail = {}) {
  if (lhs == rhs) return std::nullopt;
  return Witness{args, std::move(lhs), std::move(rhs), std::move(detail)};
}

std::optional<Witness> evaluate(const Algebra& alg, Identity id,
                                const Args& a) {
  auto mul = [&](const AlgebraElement& x, const AlgebraElement& y) {
    return multiply(alg, x, y);
  };
  switch (id.kind) {
    case IdentityKind::associative:
      return mismatch(a, mul(mul(a[0], a[1]), a[2]), mul(a[0], mul(a[1], a[2])));
    case IdentityKind::commutative:
      return mismatch(a, mul(a[0], a[1]), mul(a[1], a[0]));
    case IdentityKind::anticommutative:
      return mismatch(a, mul(a[0], a[1]), -mul(a[1], a[0]));
    case IdentityKind::jacobi: {
      const auto& [x, y, z] = std::tie(a[0], a[1], a[2]);
      return mismatch(a, mul(mul(x, y), z) + mul(mul(y, z), x) + mul(mul(z, x), y),
                      AlgebraElement::zero(alg.n()));
    }
    case IdentityKind::jordan: {
      const auto& x = a[0];
      const auto& y = a[1];
      const auto x2 = mul(x, x);
      return mismatch(a, mul(mul(x, y), x2), mul(x, mul(y, x2)));
    }
    case IdentityKind::alternative: {
      const auto& x = a[0];
      const auto& y = a[1];
      const auto xx = mul(x, x);
      if (auto w = mismatch(a, mul(xx, y), mul(x, mul(x, y)), "left")) return w;
      return mismatch(a, mul(mul(y, x), x), mul(y, xx), "right");
    }
    case IdentityKind::flexible:
      return mismatch(a, mul(a[0], mul(a[1], a[0])), mul(mul(a[0], a[1]), a[0]));
    case IdentityKind::power_associative: {
      const auto& x = a[0];
      std::vector<AlgebraElement> powers{x};  // powers[k-1] = x^k
      while (powers.size() < id.max_degree) {
        powers.push_back(mul(powers.back(), x));
      }
      for (unsigned total = 2; total <= id.max_degree; ++total) {
        for (unsigned m = 1; m < total; ++m) {
          const unsigned n = total - m;
          auto w = mismatch(a, mul(powers[m - 1], powers[n - 1]),
                            powers[total - 1],
                            "m=" + std::to_string(m) + ",n=" + std::to_string(n));
          if (w) return w;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

struct Found {
  Witness witness;
  VerdictMethod phase;
};

// Visits all basis tuples of the given arity in lexicographic order, then
// `samples` random tuples; stops at the first witness.
std::optional<Found> search(
    const Algebra& alg, std::size_t k, std::size_t samples, std::uint64_t seed,
    const std::function<std::optional<Witness>(const Args&)>& eval) {
  const std::size_t d = alg.dim();
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Args args;
    for (auto i : idx) args.push_back(alg.basis(i));
    if (auto w = eval(args)) {
      return Found{std::move(*w), VerdictMethod::exhaustive_basis};
    }
    std::size_t pos = k;
    while (pos > 0 && ++idx[pos - 1] == d) idx[--pos] = 0;
    if (pos == 0) break;
  }
  ElementSampler sampler(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Args args;
    for (std::size_t j = 0; j < k; ++j) args.push_back(sampler.next(alg.n()));
    if (auto w = eval(args)) return Found{std::move(*w), VerdictMethod::randomized};
  }
  return std::nullopt;
}

}  // namespace

IdentityVerdict check_identity(const Algebra& alg, Identity id,
                               std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  if (id.kind == IdentityKind::power_associative && id.max_degree < 3) {
    throw std::invalid_argument("power associativity needs max_degree >= 3");
  }
  if (implied_by_associativity(id.kind) &&
      satisfies_structural_associativity(alg)) {
    return {true, std::nullopt, VerdictMethod::structural};
  }
  auto found = search(alg, arity(id.kind), samples, seed,
                      [&](const Args& a) { return evaluate(alg, id, a); });
  if (found) {
    if (always_holds(id.kind)) {
      throw InternalInconsistency(to_string(id.kind) + " law failed at " +
                                  found->witness.args[0].to_string());
    }
    return {false, std::move(found->witness), found->phase};
  }
  if (id.kind == IdentityKind::associative) {
    // Associativity holds exactly when A^2 = 0 and b = 0.
    throw InternalInconsistency(
        "associativity holds on all basis triples but A^2 = 0, b = 0 fails");
  }
  if (always_holds(id.kind)) return {true, std::nullopt, VerdictMethod::structural};
  if (multilinear(id.kind)) {
    return {true, std::nullopt, VerdictMethod::exhaustive_basis};
  }
  return {true, std::nullopt, VerdictMethod::randomized};
}

bool witness_reproduces(const Algebra& alg, Identity id, const Witness& w) {
  if (w.args.size() != arity(id.kind)) return false;
  const auto again = evaluate(alg, id, w.args);
  return again && again->lhs == w.lhs && again->rhs == w.rhs &&
         again->detail == w.detail;
}

IdentityVerdict triple_products_vanish(const Algebra& alg, std::size_t samples,
                                       std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  const auto zero = AlgebraElement::zero(alg.n());
  auto found = search(alg, 3, samples, seed, [&](const Args& a) {
    return mismatch(a, multiply(alg, multiply(alg, a[0], a[1]), a[2]), zero);
  });
  if (satisfies_structural_associativity(alg) && found) {
    throw InternalInconsistency("triple product nonzero although A^2 = 0, b = 0");
  }
  if (found) return {false, std::move(found->witness), found->phase};
  return {true, std::nullopt, VerdictMethod::exhaustive_basis};
}

Subspace subspace_product(const Algebra& alg, const Subspace& s,
                          const Subspace& t) {
  if (s.ambient() != alg.dim() || t.ambient() != alg.dim()) {
    throw DimensionError("subspace ambient dimension mismatch");
  }
  std::vector<Vector> products;
  for (const auto& x : s.basis()) {
    const auto ex = AlgebraElement::from_coords(x);
    for (const auto& y : t.basis()) {
      products.push_back(
          multiply(alg, ex, AlgebraElement::from_coords(y)).coords());
    }
  }
  return Subspace::span(alg.dim(), products);
}

PowerChains power_chains(const Algebra& alg, unsigned max_k) {
  PowerChains c;
  const Subspace whole = Subspace::whole(alg.dim());
  c.derived.push_back(whole);
  c.right.push_back(whole);
  c.lower.push_back(whole);
  for (unsigned k = 2; k <= max_k; ++k) {
    c.derived.push_back(subspace_product(alg, c.derived.back(), c.derived.back()));
    c.right.push_back(subspace_product(alg, c.right.back(), whole));
    Subspace sum(alg.dim());
    for (unsigned i = 1; i < k; ++i) {
      sum = sum.plus(subspace_product(alg, c.lower[i - 1], c.lower[k - i - 1]));
    }
    c.lower.push_back(std::move(sum));
  }
  return c;
}

NilpotencyIndices nilpotency_indices(const Algebra& alg, unsigned max_k) {
  if (max_k < 2) throw std::invalid_argument("max_k must be >= 2");
  const PowerChains c = power_chains(alg, max_k);
  auto first_zero = [](const std::vector<Subspace>& chain)
      -> std::optional<unsigned> {
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (chain[k].is_zero()) return static_cast<unsigned>(k + 1);
    }
    return std::nullopt;
  };
  return {first_zero(c.derived), first_zero(c.right), first_zero(c.lower)};
}

}  // namespace eacp
