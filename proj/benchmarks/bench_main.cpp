#include <benchmark/benchmark.h>

#include "berndenom/denom.hpp"
#include "berndenom/oracle.hpp"
#include "berndenom/prime_sieve.hpp"
#include "berndenom/scanner.hpp"

using namespace berndenom;

namespace {

const PrimeSieve& shared_sieve()
{
    static const PrimeSieve s(scan_sieve_limit(1 << 22));
    return s;
}

void BM_SieveConstruction(benchmark::State& state)
{
    for (auto _ : state) {
        PrimeSieve s(static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(s.size());
    }
}
BENCHMARK(BM_SieveConstruction)->Range(1 << 12, 1 << 24)->Unit(benchmark::kMicrosecond);

// inverted per-prime enumeration over [1, hi]
void BM_ScanInverted(benchmark::State& state)
{
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan_omega_plus(1, hi, shared_sieve()).exceptional.size());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hi));
}
BENCHMARK(BM_ScanInverted)->RangeMultiplier(4)->Range(1 << 10, 1 << 22)->Unit(benchmark::kMillisecond);

// same quantity, one n at a time
void BM_ScanPerN(benchmark::State& state)
{
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::size_t total = 0;
        for (std::uint64_t n = 1; n <= hi; ++n) total += dd_split_sqrt(n, shared_sieve()).plus.omega();
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hi));
}
BENCHMARK(BM_ScanPerN)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(profile(n, shared_sieve()).db.value());
}
BENCHMARK(BM_Profile)->RangeMultiplier(10)->Range(10, 1'000'000)->Unit(benchmark::kMicrosecond);

void BM_OracleTable(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        BernoulliTable t(n);
        benchmark::DoNotOptimize(denominator_of(t.polynomial(n)));
    }
}
BENCHMARK(BM_OracleTable)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
