// Serial vs OpenMP timings of the exhaustive kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "orthomat/axioms.hpp"
#include "orthomat/linalg.hpp"
#include "orthomat/orientation.hpp"
#include "orthomat/representations.hpp"

using namespace orthomat;

namespace {

SkewSymmetricMatrix random_skew(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  SkewSymmetricMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.set(i, j, d(rng));
  return a;
}

Execution exec_of(const benchmark::State& s) { return s.range(1) ? Execution::Parallel : Execution::Serial; }

void BM_PfaffianMap(benchmark::State& state) {
  auto a = random_skew(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian_map(a, ElementSet(a.dim()), exec_of(state)));
}

void BM_OrientedDeltaCheck(benchmark::State& state) {
  auto a = random_skew(static_cast<int>(state.range(0)), 11);
  auto p = oriented_delta_from_matrix(a, ElementSet(a.dim()));
  for (auto _ : state) benchmark::DoNotOptimize(check_oriented_delta(p, {}, exec_of(state)));
}

void BM_DnGaleMaximality(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SkewSymmetricMatrix a = random_skew(n, 5);
  RationalMatrix m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = 1;
  }
  auto bases = bases_from_isotropic_rep(validate_isotropy(m, FormKind::Orthogonal));
  for (auto _ : state) benchmark::DoNotOptimize(check_gale_maximality(bases, GaleFamily::Dn, {}, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_PfaffianMap)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrientedDeltaCheck)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DnGaleMaximality)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
