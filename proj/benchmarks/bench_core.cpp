#include <benchmark/benchmark.h>

#include <cmath>

#include "uflab/dft.hpp"
#include "uflab/explorer.hpp"
#include "uflab/functionals.hpp"
#include "uflab/norms.hpp"
#include "uflab/quadrature.hpp"
#include "uflab/verifier.hpp"

using namespace uflab;

static void BM_QuadratureGaussian(benchmark::State& state) {
    const double bp[] = {-8.0, -1.0, 0.0, 1.0, 8.0};
    for (auto _ : state) {
        auto r = integrate([](double x) { return std::exp(-M_PI * x * x); }, bp, 0.0, 1e-12);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_QuadratureGaussian);

static void BM_LqNormTwoScale(benchmark::State& state) {
    const TestFunction g = make_two_scale(TwoScaleParams(static_cast<double>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lq_norm_quad(g, 4.0, 1e-10).value);
    }
}
BENCHMARK(BM_LqNormTwoScale)->Arg(10)->Arg(1000)->Arg(100000);

static void BM_EvalFqChirp(benchmark::State& state) {
    const TestFunction f = GaussianMixture(make_chirp(ChirpParams(2.0)));
    const auto method = static_cast<EvalMethod>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_Fq(f, 4.0, method, 1e-10).value);
    }
}
BENCHMARK(BM_EvalFqChirp)
    ->Arg(static_cast<int>(EvalMethod::closed_form))
    ->Arg(static_cast<int>(EvalMethod::quadrature));

static void BM_EvalFqRandomHermite(benchmark::State& state) {
    TestFunctionSpec spec;
    spec.family = TestFamily::hermite;
    spec.size = 8;
    spec.seed = 3;
    const TestFunction f = random_schwartz(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_Fq(f, 1.5, EvalMethod::quadrature, 1e-10).value);
    }
}
BENCHMARK(BM_EvalFqRandomHermite);

static void BM_DftApprox(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f = GaussianMixture(make_chirp(ChirpParams(2.0)));
    const SampledFunction s = sample(f, n, 8.0 / static_cast<double>(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dft_approx(s).samples().data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DftApprox)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

static void BM_ChirpSweep(benchmark::State& state) {
    const auto grid = parse_grid("1.02:10000:64log");
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(Family::chirp, 4.0, std::nullopt, grid).rows.data());
    }
}
BENCHMARK(BM_ChirpSweep);

static void BM_VerifyFqLower(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_fq_lower_bound(1.5, 50, 42, 1e-9).worst_slack);
    }
}
BENCHMARK(BM_VerifyFqLower)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
