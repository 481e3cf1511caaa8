#include <benchmark/benchmark.h>

#ifdef SIMTRACE_HAVE_TEST_SUPPORT

#include <fmt/format.h>

#include "helpers.hpp"
#include "program_gen.hpp"
#include "simtrace/report.hpp"

namespace {

namespace tst = simtrace::testing;

simtrace::Collection NearDuplicates(std::size_t files, std::size_t lines) {
  std::size_t functions = 1;
  auto base = tst::GenerateProgram(tst::GenLang::kPython, 7, functions, 8);
  while (tst::CountRenderedLines(base) < lines) {
    base = tst::GenerateProgram(tst::GenLang::kPython, 7, ++functions, 8);
  }
  std::vector<tst::NamedSource> sources;
  for (std::size_t i = 0; i < files; ++i) {
    sources.push_back({fmt::format("s{:03}/main.py", i), tst::Render(tst::Mutate(base, i, 0.1))});
  }
  simtrace::CollectionOptions options;
  options.threads = 1;
  return tst::CollectionOf(sources, options);
}

void Run(benchmark::State& state, std::size_t files, std::size_t lines) {
  const auto collection = NearDuplicates(files, lines);
  simtrace::CollectionOptions options;
  options.threads = 1;
  for (auto _ : state) {
    auto copy = collection;
    benchmark::DoNotOptimize(simtrace::Analyze(std::move(copy), options));
  }
}

void BM_CollectionFiles(benchmark::State& state) {
  Run(state, static_cast<std::size_t>(state.range(0)), 200);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CollectionFiles)->Arg(25)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

void BM_CollectionLines(benchmark::State& state) {
  Run(state, 50, static_cast<std::size_t>(state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CollectionLines)->Arg(100)->Arg(200)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

}  // namespace

#endif
