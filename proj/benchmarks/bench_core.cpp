// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <complex>
#include <folm/experiment.hpp>
#include <folm/interferometer.hpp>

using namespace folm;

static void BM_Birefringence(benchmark::State& state) {
  const MaterialParams mat;
  const Orientation o{0.7, 1.3, 0.02, 0.4};
  for (auto _ : state) {
    auto b = birefringence(o, mat);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_Birefringence);

static void BM_SphereJones(benchmark::State& state) {
  const MaterialParams mat;
  const SphereParams sph;
  const Orientation o{0.7, 1.3, 0.02, 0.4};
  const BirefringenceVector b = birefringence(o, mat);
  for (auto _ : state) {
    auto j = sphere_jones(b, sph, mat);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_SphereJones);

static void BM_TensorReduction(benchmark::State& state) {
  const MaterialParams mat;
  const Orientation o{0.7, 1.3, 0.02, 0.4};
  for (auto _ : state) {
    auto pd = pauli_reduce(transformed_dielectric(o, mat, mat.n_0));
    benchmark::DoNotOptimize(pd);
  }
}
BENCHMARK(BM_TensorReduction);

static void BM_CoherentState(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = coherent_state(std::complex<double>(1.4, -0.3), dim);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CoherentState)->Arg(64)->Arg(256);

static void BM_Displacement(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto d = displacement(std::complex<double>(1.4, -0.3), dim);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Displacement)->Arg(32)->Arg(64)->Arg(128);

static void BM_SchmidtPurity(benchmark::State& state) {
  const CouplerParams c = CouplerParams::from_ratio(0.8);
  for (auto _ : state) {
    auto sd = schmidt_decompose(c, {1.1, 0.4}, {-0.9, 0.2}, 64);
    benchmark::DoNotOptimize(sd);
  }
}
BENCHMARK(BM_SchmidtPurity);

static void BM_FockPurityOracle(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const CouplerParams c = CouplerParams::from_ratio(0.8);
  for (auto _ : state) {
    double p = purity_fock_oracle(c, {1.1, 0.4}, {-0.9, 0.2}, dim);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_FockPurityOracle)->Arg(64)->Arg(128);

static void BM_ScenarioRow(benchmark::State& state) {
  Scenario s;
  s.perpendicular.alpha_i = std::complex<double>(1.0, 0.0);
  for (auto _ : state) {
    auto r = run_configuration(s);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ScenarioRow);

BENCHMARK_MAIN();
