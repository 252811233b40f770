// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "wzw/affine.hpp"
#include "wzw/chevalley.hpp"
#include "wzw/heisenberg.hpp"
#include "wzw/tensor.hpp"

using namespace wzw;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_TensorSweep(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(tensor_agreement_sweep(AlgebraId::parse("B3"), 128, mode(s)));
  label(s);
}

void BM_StructureCheck(benchmark::State& s) {
  auto e8 = build_simply_laced(AlgebraId{'E', 8});
  for (auto _ : s) {
    std::mt19937_64 rng(1);
    benchmark::DoNotOptimize(check_structure_sampled(*e8, rng, 2000, mode(s)));
  }
  label(s);
}

void BM_FusionSweep(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(fusion_agreement_sweep(AlgebraId::parse("D4"), 2, mode(s)));
  label(s);
}

void BM_EnergyProbe(benchmark::State& s) {
  FockSpace F({Q(2)});
  for (auto _ : s) benchmark::DoNotOptimize(energy_bound_probe(F, {Q(1)}, {Q(0)}, 1, {8, 12}, 6, 1.05, mode(s)));
  label(s);
}

}  // namespace

BENCHMARK(BM_TensorSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FusionSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyProbe)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
