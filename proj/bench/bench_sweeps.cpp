// Serial vs OpenMP sweeps. The parallel result is checked against the serial
// one once per benchmark before timing.
#include <stdexcept>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "quivertilt/families.hpp"
#include "quivertilt/phi.hpp"
#include "quivertilt/sweep.hpp"

using namespace quivertilt;

namespace {

const std::vector<GridItem>& grid() {
  static const auto items = normal_form_grid({1, 2, 3});
  return items;
}

const std::vector<BoundQuiver>& pool() {
  static const auto p = [] {
    std::vector<BoundQuiver> out;
    for (const auto& it : normal_form_grid({2, 3}, GridBounds{8, 3, 3})) out.push_back(build_normal_form(it.params, it.m));
    return out;
  }();
  return p;
}

template <class F, class G>
void check_same(F serial, G parallel) {
  if (serial() != parallel()) throw std::runtime_error("parallel sweep disagrees with serial");
}

void BM_PhiSweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(phi_sweep_serial(grid()));
  st.SetItemsProcessed(st.iterations() * grid().size());
}

void BM_PhiSweepParallel(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(0)));
  check_same([] { return phi_sweep_serial(grid()); }, [] { return phi_sweep_parallel(grid()); });
  for (auto _ : st) benchmark::DoNotOptimize(phi_sweep_parallel(grid()));
  st.SetItemsProcessed(st.iterations() * grid().size());
}

void BM_MutationSweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mutation_sweep_serial(pool(), 500, 1));
  st.SetItemsProcessed(st.iterations() * 500);
}

void BM_MutationSweepParallel(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(0)));
  check_same([] { return mutation_sweep_serial(pool(), 500, 1); },
             [] { return mutation_sweep_parallel(pool(), 500, 1); });
  for (auto _ : st) benchmark::DoNotOptimize(mutation_sweep_parallel(pool(), 500, 1));
  st.SetItemsProcessed(st.iterations() * 500);
}

void BM_ReductionSweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reduction_sweep_serial(16, 3));
  st.SetItemsProcessed(st.iterations() * 16);
}

void BM_ReductionSweepParallel(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(0)));
  check_same([] { return reduction_sweep_serial(16, 3); }, [] { return reduction_sweep_parallel(16, 3); });
  for (auto _ : st) benchmark::DoNotOptimize(reduction_sweep_parallel(16, 3));
  st.SetItemsProcessed(st.iterations() * 16);
}

// single kernel for scale
void BM_ComputePhi(benchmark::State& st) {
  auto q = build_normal_form(NonOriented{6, 4, 5, 3, 1}, 2);
  for (auto _ : st) benchmark::DoNotOptimize(compute_phi(q));
}

}  // namespace

BENCHMARK(BM_ComputePhi);
BENCHMARK(BM_PhiSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiSweepParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MutationSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MutationSweepParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ReductionSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReductionSweepParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
