#include <benchmark/benchmark.h>

#include <random>

#include "qident/pochhammer.hpp"
#include "qident/qbinom.hpp"
#include "qident/qpoly.hpp"

using qident::exact::QPoly;

namespace {

QPoly random_poly(std::size_t terms, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> digit(-1000000, 1000000);
  std::vector<long> c(terms);
  for (auto& x : c) x = digit(rng);
  return QPoly::from_ints(c);
}

// args: polynomial length, Karatsuba threshold
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t saved = qident::exact::karatsuba_threshold();
  qident::exact::set_karatsuba_threshold(static_cast<std::size_t>(state.range(1)));
  const QPoly a = random_poly(n, 1);
  const QPoly b = random_poly(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  qident::exact::set_karatsuba_threshold(saved);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiply)->ArgsProduct({{128, 512, 2048}, {16, 32, 64, 128, 1 << 20}});

void BM_QBinomRow(benchmark::State& state) {
  const long t = state.range(0);
  for (auto _ : state) {
    for (long m = 0; m <= t; ++m) benchmark::DoNotOptimize(qident::qkit::qbinom(t, m));
  }
}
BENCHMARK(BM_QBinomRow)->Arg(20)->Arg(40)->Arg(80);

void BM_ExactDiv(benchmark::State& state) {
  const long n = state.range(0);
  const QPoly num = qident::qkit::q_factorial(2 * n);
  const QPoly den = qident::qkit::q_factorial(n) * qident::qkit::q_factorial(n);
  for (auto _ : state) benchmark::DoNotOptimize(qident::exact::exact_div(num, den));
}
BENCHMARK(BM_ExactDiv)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
