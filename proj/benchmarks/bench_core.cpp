#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qp/gram_charlier.hpp"
#include "qp/oracle.hpp"
#include "qp/quartic.hpp"

namespace {

std::vector<qp::ReducedQuartic> random_quartics(size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::vector<qp::ReducedQuartic> out(n);
  for (auto& rq : out) rq = {coef(rng), coef(rng), coef(rng)};
  return out;
}

void IsPositive(benchmark::State& state) {
  const auto inputs = random_quartics(1024);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qp::is_positive(inputs[i++ & 1023]).verdict);
  }
}
BENCHMARK(IsPositive);

void ConditionC3(benchmark::State& state) {
  const auto inputs = random_quartics(1024);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qp::check_c3(inputs[i++ & 1023]));
  }
}
BENCHMARK(ConditionC3);

void ConditionC4(benchmark::State& state) {
  const auto inputs = random_quartics(1024);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qp::check_c4(inputs[i++ & 1023]));
  }
}
BENCHMARK(ConditionC4);

void CubicRoots(benchmark::State& state) {
  const auto inputs = random_quartics(1024);
  size_t i = 0;
  for (auto _ : state) {
    const auto& rq = inputs[i++ & 1023];
    benchmark::DoNotOptimize(
        qp::oracle::cubic_real_roots({4.0, 0.0, 2.0 * rq.p, rq.q}));
  }
}
BENCHMARK(CubicRoots);

void OracleGlobalMin(benchmark::State& state) {
  const auto inputs = random_quartics(1024);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qp::oracle::global_min(inputs[i++ & 1023]).f_min);
  }
}
BENCHMARK(OracleGlobalMin);

void GcInRegion(benchmark::State& state) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> e3(-0.3, 0.3);
  std::uniform_real_distribution<double> e4(0.001, 0.17);
  std::vector<qp::gc::GCParams> inputs(1024);
  for (auto& g : inputs) g = {e3(rng), e4(rng)};
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qp::gc::gc_in_region(inputs[i++ & 1023]).verdict);
  }
}
BENCHMARK(GcInRegion);

void RegionGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qp::gc::region_grid(0.0, 0.17, -0.3, 0.3, n, n).size());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(RegionGrid)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
