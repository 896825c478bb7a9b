#include <benchmark/benchmark.h>

#include "weylwords/verify.hpp"

namespace {

using weylwords::Execution;
using weylwords::RootSystem;
using weylwords::TypeLabel;

void run(benchmark::State& state, const char* type, Execution exec) {
  const RootSystem sys = RootSystem::build(TypeLabel::parse(type));
  for (auto _ : state) {
    auto report = weylwords::verify_all(sys, exec);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sys.positives().size()));
}

void BM_VerifySerial(benchmark::State& s, const char* type) { run(s, type, Execution::Serial); }
void BM_VerifyParallel(benchmark::State& s, const char* type) { run(s, type, Execution::Parallel); }

void BM_InversionSet(benchmark::State& state) {
  const RootSystem sys = RootSystem::build(TypeLabel::parse("E8"));
  const auto w = weylwords::reflection_word(sys, sys.highest_root());
  for (auto _ : state) benchmark::DoNotOptimize(weylwords::inversion_set(sys, w));
}

}  // namespace

BENCHMARK_CAPTURE(BM_VerifySerial, C8, "C8");
BENCHMARK_CAPTURE(BM_VerifyParallel, C8, "C8");
BENCHMARK_CAPTURE(BM_VerifySerial, E7, "E7");
BENCHMARK_CAPTURE(BM_VerifyParallel, E7, "E7");
BENCHMARK_CAPTURE(BM_VerifySerial, E8, "E8");
BENCHMARK_CAPTURE(BM_VerifyParallel, E8, "E8");
BENCHMARK(BM_InversionSet);

BENCHMARK_MAIN();
