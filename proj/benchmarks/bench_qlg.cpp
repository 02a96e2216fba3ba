#include <benchmark/benchmark.h>

#include <random>

#include "qlg/qlg.hpp"

using namespace qlg;

namespace {

SpinorField field(std::size_t L) {
  std::mt19937_64 g(3);
  std::normal_distribution<double> n;
  SpinorField f(L);
  for (auto& s : f.sites) s = {cplx(n(g), n(g)), cplx(n(g), n(g))};
  normalize(f);
  return f;
}

void BM_Step(benchmark::State& st) {
  const auto L = static_cast<std::size_t>(st.range(0));
  const Evolution ev(CollideParams::uniform(L, 0.1, 1.2));
  auto f = field(L);
  for (auto _ : st) {
    ev.step(f);
    benchmark::DoNotOptimize(f.sites.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_Step)->Arg(256)->Arg(1024)->Arg(16384);

void BM_StepRotating(benchmark::State& st) {
  const auto L = static_cast<std::size_t>(st.range(0));
  const Evolution ev(CollideParams::uniform(L, 0.1, 1.2));
  auto f = field(L);
  for (auto _ : st) {
    ev.step_rotating(f);
    benchmark::DoNotOptimize(f.sites.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_StepRotating)->Arg(1024);

void BM_ManyBodyStep(benchmark::State& st) {
  const int L = static_cast<int>(st.range(0));
  const ManyBodyEvolution ev(L, CollideParams::uniform(L, mass_for_bend(0.3)));
  auto s = embed_one_body(field(L));
  for (auto _ : st) {
    ev.step(s);
    benchmark::DoNotOptimize(s.amp.data());
  }
}
BENCHMARK(BM_ManyBodyStep)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TransferKernel(benchmark::State& st) {
  const PathProblem p{static_cast<int>(st.range(0)), 0, 0.3, 1.0};
  for (auto _ : st) benchmark::DoNotOptimize(transfer_kernel(p, 1));
}
BENCHMARK(BM_TransferKernel)->Arg(12)->Arg(24)->Arg(200);

void BM_EnumerateKernel(benchmark::State& st) {
  const PathProblem p{static_cast<int>(st.range(0)), 0, 0.3, 1.0};
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_kernel(p, 1));
}
BENCHMARK(BM_EnumerateKernel)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_WellRoot(benchmark::State& st) {
  SquareWellSpec s;
  s.well_length = 224;
  s.inner_mass = 0.15;
  s.barrier_mass = 1.5;
  for (auto _ : st) benchmark::DoNotOptimize(solve_well_wavenumber(s));
}
BENCHMARK(BM_WellRoot);

}  // namespace

BENCHMARK_MAIN();
