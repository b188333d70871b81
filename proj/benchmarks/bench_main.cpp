#include <benchmark/benchmark.h>

#include <random>

#include "qlimits/circuit.hpp"
#include "qlimits/entropy.hpp"
#include "qlimits/graph.hpp"
#include "qlimits/lindblad.hpp"
#include "qlimits/maxcut.hpp"
#include "qlimits/noise.hpp"
#include "qlimits/transport.hpp"

using namespace qlimits;

namespace {

MeasuredDistribution random_distribution(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(std::size_t{1} << n);
  double total = 0.0;
  for (auto& x : p) total += (x = u(rng));
  for (auto& x : p) x /= total;
  return make_distribution(qubits(n), std::move(p));
}

}  // namespace

static void BM_W1Classical(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int n = static_cast<int>(state.range(0));
  auto mu = random_distribution(n, rng);
  auto nu = random_distribution(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(w1_classical(mu, nu).value);
}
BENCHMARK(BM_W1Classical)->DenseRange(2, 6, 2);

static void BM_SdpiNorm(benchmark::State& state) {
  auto noise = NoiseModel::generalized_depolarizing(0.3, 0.2);
  auto map = noise.as_map();
  for (auto _ : state) benchmark::DoNotOptimize(sdpi_norm(map, noise.fixed_point(), 0.1));
}
BENCHMARK(BM_SdpiNorm);

static void BM_QaoaExpectedCut(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_regular_bipartite(n, 3, 11);
  std::vector<double> gamma{0.4, 0.7}, beta{0.3, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(qaoa_expected_cut(g, gamma, beta));
}
BENCHMARK(BM_QaoaExpectedCut)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

static void BM_SimulateCircuit(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto circuit = build_qaoa_circuit({cycle_graph(n), {0.4, 0.7}, {0.3, 0.2}});
  auto noise = NoiseModel::depolarizing(0.05);
  auto rho0 = plus_state(n);
  SimulationOptions opt;
  opt.record_trajectory = false;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_circuit(circuit, noise, rho0, opt).final_state);
}
BENCHMARK(BM_SimulateCircuit)->DenseRange(3, 6, 1);

static void BM_SimulateLindblad(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  AnnealSchedule schedule;
  schedule.T = 2.0;
  schedule.q = 0.3;
  auto rho0 = plus_state(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_lindblad(schedule, cycle_graph(n), rho0, 0.02).final_state);
}
BENCHMARK(BM_SimulateLindblad)->DenseRange(3, 4, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
