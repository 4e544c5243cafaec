#include <benchmark/benchmark.h>

#include <random>

#include "fockideal/family.hpp"
#include "fockideal/lattice.hpp"
#include "fockideal/measure.hpp"
#include "fockideal/snf.hpp"
#include "fockideal/spectra.hpp"
#include "fockideal/toeplitz.hpp"
#include "fockideal/verify.hpp"

namespace {

using namespace fockideal;

void BM_LatticeEnumerate(benchmark::State& state) {
  const LatticeSpec spec(0.5, static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    auto pts = enumerate(spec);
    benchmark::DoNotOptimize(pts);
  }
  state.SetItemsProcessed(state.iterations() * cumulative_count(static_cast<int>(state.range(0)), 8));
}
BENCHMARK(BM_LatticeEnumerate)->Arg(1)->Arg(2);

void BM_GramSpectrum(benchmark::State& state) {
  const auto fam = seeded_atomic_family(1, 1, 1, static_cast<int>(state.range(0)), 2.0);
  AtomicMeasure nu = fam.front();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  while (static_cast<int>(nu.atoms.size()) < state.range(0))
    nu.atoms.push_back(Atom{ComplexPoint({{u(rng), u(rng)}}), 1.0});
  for (auto _ : state) {
    auto sv = s_numbers(build_atomic(nu).matrix);
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_GramSpectrum)->RangeMultiplier(2)->Range(8, 64);

void BM_HeatLatticeSequence(benchmark::State& state) {
  const auto fam = seeded_atomic_family(3, 1, 1, 10, 1.5);
  const Measure nu = fam.front();
  const int shell = minimal_adequate_shell(nu, Transform::heat(1.0), 1.0, 1);
  const LatticeSpec spec(1.0, 1, shell);
  for (auto _ : state) {
    auto seq = lattice_sequence(nu, Transform::heat(1.0), spec);
    benchmark::DoNotOptimize(seq);
  }
  state.SetItemsProcessed(state.iterations() * cumulative_count(1, shell));
}
BENCHMARK(BM_HeatLatticeSequence);

void BM_BoxMassDensity(benchmark::State& state) {
  const DensityMeasure d(1, {1.0, 0.5, 0.25}, 1.0);
  const Measure nu = d;
  const ComplexPoint z({{0.7, -0.3}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(box_mass(nu, 1.0, z));
  }
}
BENCHMARK(BM_BoxMassDensity);

void BM_NormingFunctionEval(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  for (auto& v : xs) v = u(rng);
  const auto phi = NormingFunction::lorentz();
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi.eval(xs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NormingFunctionEval)->RangeMultiplier(4)->Range(64, 16384);

void BM_SandwichSeriesConstant(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sandwich_series_constant(1, 0.5, 1.0, 0.5));
  }
}
BENCHMARK(BM_SandwichSeriesConstant);

void BM_KernelIntegral(benchmark::State& state) {
  const ComplexPoint z({{1.5, -0.5}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalized_kernel_integral(z, 2.0));
  }
}
BENCHMARK(BM_KernelIntegral);

}  // namespace

BENCHMARK_MAIN();
