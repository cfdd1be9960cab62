#include <benchmark/benchmark.h>

#include <vector>

#include "helixforge/discover.hpp"
#include "helixforge/helix.hpp"
#include "helixforge/identity.hpp"
#include "helixforge/sequence.hpp"

using namespace helixforge;

// Exact two-sided sequence walk, the inner loop of every verifier.
static void BM_SequenceWindow(benchmark::State& state) {
    const MetallicParams params = make_params(state.range(0));
    for (auto _ : state) {
        const SequenceCache seq(params);
        mpz_class acc = 0;
        for (long long k = -50; k <= 200; ++k) acc += seq.lucas(k) + seq.fibonacci(k);
        benchmark::DoNotOptimize(acc.get_mpz_t());
    }
}
BENCHMARK(BM_SequenceWindow)->Arg(1)->Arg(10)->Arg(1000);

static void BM_ContinuedEval(benchmark::State& state) {
    const MetallicParams params = make_params(2);
    for (auto _ : state) {
        Complex acc = 0.0;
        for (int i = 0; i <= 1000; ++i) acc += g_eval(params, -3.0 + 0.013 * i);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ContinuedEval);

static void BM_DefiningCombination(benchmark::State& state) {
    const MetallicParams params = make_params(2);
    for (auto _ : state) {
        Complex acc = 0.0;
        for (int i = 0; i <= 1000; ++i) acc += psi_def(MapId::Psi3, params, -3.0 + 0.013 * i);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_DefiningCombination);

// The figure-scale sampling job: 3001 points including the spot checks.
static void BM_CurveSample(benchmark::State& state) {
    const MetallicParams params = make_params(2);
    for (auto _ : state) {
        const CurveSamples s = curve_sample(MapId::Psi3, params, 0.0, 15.0, 0.005);
        benchmark::DoNotOptimize(s.points.data());
    }
}
BENCHMARK(BM_CurveSample);

static void BM_VerifyIdentity(benchmark::State& state) {
    for (auto _ : state) {
        const IdentityReport r = verify_identity(IdentityId::PellForm, 7, -50, 200);
        benchmark::DoNotOptimize(r.failures.data());
    }
}
BENCHMARK(BM_VerifyIdentity);

static void BM_DiscoverCoefficients(benchmark::State& state) {
    const std::vector<long long> Ps = {1, 2, 3};
    const std::vector<long long> ks = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    for (auto _ : state) {
        const CoeffSolution s = discover_coefficients(TemplateId::Psi7, Ps, ks);
        benchmark::DoNotOptimize(s.terms.data());
    }
}
BENCHMARK(BM_DiscoverCoefficients);

BENCHMARK_MAIN();
