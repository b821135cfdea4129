#include <benchmark/benchmark.h>

#include <random>

#include "clusterforge/compiler.hpp"
#include "clusterforge/parallel.hpp"
#include "clusterforge/tableau.hpp"
#include "clusterforge/verify.hpp"

using namespace clusterforge;

static void BM_TableauGates(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Tableau t = Tableau::plus_state(n);
  std::size_t q = 0;
  for (auto _ : state) {
    t.apply_h(q);
    t.apply_cz(q, (q + 1) % n);
    q = (q + 1) % n;
  }
  benchmark::DoNotOptimize(t);
}
BENCHMARK(BM_TableauGates)->Arg(64)->Arg(256)->Arg(1024);

static void BM_TableauEntangler(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  OutcomeSource src = OutcomeSource::seeded(1);
  for (auto _ : state) {
    state.PauseTiming();
    Tableau t = Tableau::plus_state(n);
    state.ResumeTiming();
    for (std::size_t q = 1; q < n; ++q) t.entangler(q - 1, q, src);
  }
}
BENCHMARK(BM_TableauEntangler)->Arg(64)->Arg(256);

static void BM_BuildLattice(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Schedule s = build_lattice(n);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BuildLattice)->Arg(5)->Arg(15)->Arg(31);

static void BM_VerifyLattice(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Schedule s = build_lattice(n);
  for (auto _ : state) {
    const VerificationReport rep = verify_tableau(s, 1);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyLattice)->Arg(5)->Arg(9)->Arg(15);

static void BM_VerifyDense(benchmark::State& state) {
  const Schedule s = build_lattice(3);
  for (auto _ : state) {
    const VerificationReport rep = verify_dense(s, 1);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyDense);

static void BM_Parallelize(benchmark::State& state) {
  const Schedule s = build_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const TimedSchedule ts = parallelize(s);
    benchmark::DoNotOptimize(ts);
  }
}
BENCHMARK(BM_Parallelize)->Arg(5)->Arg(15);

BENCHMARK_MAIN();
