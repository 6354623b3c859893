#include "rpsforge/construct.hpp"
#include "rpsforge/equilibrium.hpp"
#include "rpsforge/verifier.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace rps;

void BM_UniformPayoffs(benchmark::State& state) {
  const auto rule = imbalanced_rps(static_cast<unsigned>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(uniform_expected_payoffs(rule));
}
BENCHMARK(BM_UniformPayoffs)->Arg(3)->Arg(5)->Arg(8);

void BM_SymmetricSolver(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_symmetric_rps3(m));
}
BENCHMARK(BM_SymmetricSolver)->Arg(3)->Arg(20)->Arg(64);

void BM_ExpectedWinners(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto rule = imbalanced_rps3(m);
  const auto eq = solve_symmetric_rps3(m);
  const std::vector<double> x{eq.r, eq.p, eq.s};
  for (auto _ : state) benchmark::DoNotOptimize(expected_winner_count(rule, x));
}
BENCHMARK(BM_ExpectedWinners)->Arg(10)->Arg(20);

void BM_Search(benchmark::State& state) {
  const auto rule = imbalanced_rps3(3);
  SearchConfig config;
  config.starts = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_equilibria(rule, config));
}
BENCHMARK(BM_Search)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_RawOracle(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const std::vector<Rational> r_vec(k, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(ev_raw_oracle(Role::SS, k, 2, r_vec, Rational(1, 2)));
}
BENCHMARK(BM_RawOracle)->Arg(4)->Arg(8)->Arg(12);

void BM_Certificate(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto t = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(infeasibility_certificate(k, t));
}
BENCHMARK(BM_Certificate)->Args({1, 0})->Args({6, 6})->Args({12, 12})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
