#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "simtrace/fingerprint.hpp"
#include "simtrace/options.hpp"

namespace {

std::vector<simtrace::TokenKind> RandomKinds(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<simtrace::TokenKind> kind(0, 400);
  std::vector<simtrace::TokenKind> kinds(n);
  for (auto& k : kinds) k = kind(rng);
  return kinds;
}

void BM_HashKgrams(benchmark::State& state) {
  const auto kinds = RandomKinds(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simtrace::HashKgrams(kinds, simtrace::kDefaultKgramLength));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HashKgrams)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void BM_Winnow(benchmark::State& state) {
  const auto kinds = RandomKinds(static_cast<std::size_t>(state.range(0)));
  const auto hashes = simtrace::HashKgrams(kinds, simtrace::kDefaultKgramLength);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simtrace::Winnow(hashes, simtrace::kDefaultWindowLength));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Winnow)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

}  // namespace
