#include <benchmark/benchmark.h>

#include "qident/bailey.hpp"
#include "qident/multisum.hpp"
#include "qident/registry.hpp"
#include "qident/seeds.hpp"

namespace {

using namespace qident;

// Fresh state each iteration so the F(L) memo starts empty. args: v, L
void BM_ChainF(benchmark::State& state) {
  const auto& s = registry::seed("SEED-D");
  const int v = static_cast<int>(state.range(0));
  const long L = state.range(1);
  for (auto _ : state) {
    auto st = bailey::bailey_iterate(bailey::BaileyState::from_seed(s.a, s.canonical, s.closed_form), v);
    benchmark::DoNotOptimize(st.F(L));
  }
}
BENCHMARK(BM_ChainF)->ArgsProduct({{1, 2, 3}, {10, 20}})->Unit(benchmark::kMillisecond);

// args: v, order
void BM_Multisum(benchmark::State& state) {
  const auto spec = registry::chain_multisum("SEED-D", static_cast<int>(state.range(0)));
  const int order = static_cast<int>(state.range(1));
  bailey::MultisumStats stats;
  for (auto _ : state) {
    stats = {};
    benchmark::DoNotOptimize(bailey::multisum_lhs(spec, order, 0, &stats));
  }
  state.counters["terms"] = static_cast<double>(stats.terms);
}
BENCHMARK(BM_Multisum)->ArgsProduct({{1, 2, 3}, {200, 800}})->Unit(benchmark::kMillisecond);

void BM_LimitRhs(benchmark::State& state) {
  const auto alpha = registry::chain_state("SEED-D", 2).alpha();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bailey::limit_rhs(alpha, order));
}
BENCHMARK(BM_LimitRhs)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
