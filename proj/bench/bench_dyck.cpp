#include <benchmark/benchmark.h>

#include <random>

#include "dyck/core.hpp"
#include "dyck/enumerate.hpp"
#include "dyck/oracle.hpp"
#include "dyck/parallel.hpp"

namespace {

using namespace dyck;

// Last term of range k with a valley just above the repunit suffix, so the
// brute-force scan has a long gap to cover: 1^(k/2) 0 1^(k - k/2 - 1).
DyckNumber wide_gap_term(std::size_t k) {
    const std::size_t low = k - k / 2 - 1;
    return DyckNumber(((pow2(k / 2) - 1) << (low + 1)) | (pow2(low) - 1));
}

void BM_Successor(benchmark::State& state) {
    const DyckNumber d = wide_gap_term(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(successor(d));
    }
}
BENCHMARK(BM_Successor)->Arg(16)->Arg(24)->Arg(32)->Arg(256)->Arg(4096);

void BM_BruteSuccessor(benchmark::State& state) {
    const DyckNumber d = wide_gap_term(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::brute_successor(d));
    }
}
BENCHMARK(BM_BruteSuccessor)->Arg(16)->Arg(24)->Arg(32);

void BM_VerifyConjectureSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_conjecture(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_VerifyConjectureSerial)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_VerifyConjectureParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parallel::verify_conjecture_parallel(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_VerifyConjectureParallel)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BruteRangeSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::brute_range(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_BruteRangeSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BruteRangeParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parallel::brute_range_parallel(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_BruteRangeParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SuccessorSweep(benchmark::State& state) {
    const auto exec = state.range(0) == 0 ? parallel::Execution::serial : parallel::Execution::parallel;
    for (auto _ : state) {
        benchmark::DoNotOptimize(parallel::sweep_successor_agreement(16, exec));
    }
}
BENCHMARK(BM_SuccessorSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
