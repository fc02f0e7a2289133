#include <benchmark/benchmark.h>

#include <random>

#include "pgalois/comodule.hpp"
#include "pgalois/coring.hpp"
#include "pgalois/fixtures.hpp"
#include "pgalois/generators.hpp"
#include "pgalois/morita.hpp"

using namespace pgalois;

namespace {

// Instances of dimension exactly `dim`, drawn with a fixed seed.
std::vector<PartialAction> instances(std::size_t dim, std::size_t count) {
  std::mt19937_64 rng(7);
  std::vector<PartialAction> out;
  while (out.size() < count) {
    RandomInstance inst = random_restricted_action(rng);
    if (inst.action.dim() == dim) out.push_back(inst.action);
  }
  return out;
}

void BM_Rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  PrimeField f(5);
  std::mt19937_64 rng(1);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Residue>(rng() % 5);
  for (auto _ : state) benchmark::DoNotOptimize(rref(f, m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(64)->Arg(216);

void BM_CoringAxioms(benchmark::State& state) {
  auto pas = instances(static_cast<std::size_t>(state.range(0)), 8);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(check_coring_axioms(build_coring(pas[i++ % pas.size()])));
}
BENCHMARK(BM_CoringAxioms)->Arg(2)->Arg(4)->Arg(6);

void BM_CanonicalMap(benchmark::State& state) {
  auto pas = instances(static_cast<std::size_t>(state.range(0)), 8);
  std::size_t i = 0;
  for (auto _ : state) {
    const PartialAction& pa = pas[i++ % pas.size()];
    benchmark::DoNotOptimize(canonical_map(pa, invariants(pa)));
  }
}
BENCHMARK(BM_CanonicalMap)->Arg(2)->Arg(4)->Arg(6);

void BM_Dashboard(benchmark::State& state) {
  auto pas = instances(static_cast<std::size_t>(state.range(0)), 8);
  std::size_t i = 0;
  for (auto _ : state) {
    const PartialAction& pa = pas[i++ % pas.size()];
    benchmark::DoNotOptimize(theorem_dashboard(pa, invariants(pa)));
  }
}
BENCHMARK(BM_Dashboard)->Arg(2)->Arg(4)->Arg(6);

void BM_ShiftDashboard(benchmark::State& state) {
  PartialAction pa = fixture_shift();
  Subalgebra t = invariants(pa);
  for (auto _ : state) benchmark::DoNotOptimize(theorem_dashboard(pa, t));
}
BENCHMARK(BM_ShiftDashboard);

}  // namespace

BENCHMARK_MAIN();
