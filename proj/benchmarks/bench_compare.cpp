#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "simtrace/compare.hpp"
#include "simtrace/diff.hpp"

namespace {

using simtrace::Hash;

// Right side is the left side with a sprinkling of substitutions.
std::pair<std::vector<Hash>, std::vector<Hash>> NearCopies(std::size_t n, Hash alphabet) {
  std::mt19937_64 rng(2);
  std::vector<Hash> left(n);
  for (auto& h : left) h = rng() % alphabet;
  auto right = left;
  for (std::size_t i = 0; i < n / 20; ++i) right[rng() % n] = rng() % alphabet;
  return {left, right};
}

void BM_SharedFragments(benchmark::State& state) {
  const auto [left, right] = NearCopies(static_cast<std::size_t>(state.range(0)), 1u << 30);
  for (auto _ : state) benchmark::DoNotOptimize(simtrace::FindSharedFragments(left, right));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SharedFragments)->RangeMultiplier(2)->Range(256, 1 << 14)->Complexity();

void BM_SharedFragmentsRepetitive(benchmark::State& state) {
  const auto [left, right] = NearCopies(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(simtrace::FindSharedFragments(left, right));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SharedFragmentsRepetitive)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_DiffLines(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::string left, right;
  for (std::size_t i = 0; i < n; ++i) {
    const auto line = "line " + std::to_string(rng() % 1000) + "\n";
    left += line;
    right += rng() % 10 == 0 ? "changed\n" : line;
  }
  for (auto _ : state) benchmark::DoNotOptimize(simtrace::DiffLines(left, right));
}
BENCHMARK(BM_DiffLines)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace
