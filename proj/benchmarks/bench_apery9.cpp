#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "apery9/base3.hpp"
#include "apery9/lucas.hpp"
#include "apery9/mod9eval.hpp"
#include "apery9/oracle.hpp"

namespace {

apery9::Base3Expansion random_expansion(std::size_t digits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string text = "3:";
  for (std::size_t i = 0; i < digits; ++i) text.push_back(static_cast<char>('0' + rng() % 3));
  text[2] = '2';
  return apery9::Base3Expansion::parse(text);
}

void BM_TheoremPath(benchmark::State& state) {
  const auto e = random_expansion(static_cast<std::size_t>(state.range(0)), 7);
  const apery9::AperyParams p(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(apery9::apery_mod9(e, p));
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TheoremPath)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Complexity(benchmark::oN);

void BM_Parse(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::string text = "3:1";
  for (std::int64_t i = 1; i < state.range(0); ++i) text.push_back(static_cast<char>('0' + rng() % 3));
  for (auto _ : state) benchmark::DoNotOptimize(apery9::Base3Expansion::parse(text));
}
BENCHMARK(BM_Parse)->Arg(1'000'000);

void BM_Binom9(benchmark::State& state) {
  const auto n = random_expansion(static_cast<std::size_t>(state.range(0)), 3);
  const auto k = random_expansion(static_cast<std::size_t>(state.range(0)) - 1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(apery9::lucas::binom_mod9(n, k));
}
BENCHMARK(BM_Binom9)->Arg(64)->Arg(4096);

void BM_OracleExact(benchmark::State& state) {
  const apery9::AperyParams p(2, 1);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apery9::oracle::apery_mod(n, p, 9));
}
BENCHMARK(BM_OracleExact)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_OracleTermwise(benchmark::State& state) {
  const apery9::AperyParams p(7, 5);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apery9::oracle::apery_mod_termwise(n, p, 9));
}
BENCHMARK(BM_OracleTermwise)->Arg(6560)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
