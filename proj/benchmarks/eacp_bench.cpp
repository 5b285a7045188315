#include <benchmark/benchmark.h>

#include "eacp/classification.hpp"
#include "eacp/dynamics.hpp"
#include "eacp/elements.hpp"
#include "eacp/identities.hpp"
#include "eacp/operators.hpp"
#include "eacp/sampling.hpp"

namespace {

eacp::Algebra random_algebra(std::size_t n, std::uint64_t seed) {
  eacp::ElementSampler s(seed, 3);
  std::vector<eacp::Vector> a(n, eacp::Vector(n));
  eacp::Vector b(n);
  for (auto& row : a)
    for (auto& x : row) x = s.next_rational();
  for (auto& x : b) x = s.next_rational();
  return eacp::Algebra::from_rows(a, b);
}

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto alg = random_algebra(n, 1);
  eacp::ElementSampler s(2);
  const auto x = s.next(n), y = s.next(n);
  for (auto _ : state) benchmark::DoNotOptimize(eacp::multiply(alg, x, y));
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(8)->Arg(32);

void BM_Idempotents(benchmark::State& state) {
  const auto alg = random_algebra(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(eacp::idempotents(alg));
}
BENCHMARK(BM_Idempotents)->Arg(2)->Arg(4)->Arg(6);

void BM_Centroid(benchmark::State& state) {
  const auto alg = random_algebra(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(eacp::centroid_basis(alg));
}
BENCHMARK(BM_Centroid)->Arg(2)->Arg(4)->Arg(5);

void BM_AssociativityCheck(benchmark::State& state) {
  const auto alg = random_algebra(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eacp::check_identity(alg, {eacp::IdentityKind::associative}, 32, 7));
  }
}
BENCHMARK(BM_AssociativityCheck)->Arg(2)->Arg(4);

void BM_NilpotencyIndices(benchmark::State& state) {
  const auto alg = random_algebra(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(eacp::nilpotency_indices(alg, 6));
}
BENCHMARK(BM_NilpotencyIndices)->Arg(2)->Arg(4);

void BM_ClassifyDim3(benchmark::State& state) {
  const auto alg = eacp::Algebra::from_rows(
      {{eacp::Rational(2), eacp::Rational(2)}, {eacp::Rational(4), eacp::Rational(4)}},
      {eacp::Rational(2), eacp::Rational(4)});
  for (auto _ : state) benchmark::DoNotOptimize(eacp::classify(alg));
}
BENCHMARK(BM_ClassifyDim3);

void BM_TrajectoryExact(benchmark::State& state) {
  const auto alg = random_algebra(3, 8);
  eacp::ElementSampler s(9);
  const auto x0 = s.next(3);
  eacp::TrajectoryOptions opt;
  opt.max_steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eacp::trajectory(alg, x0, opt));
}
BENCHMARK(BM_TrajectoryExact)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
