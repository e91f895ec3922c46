#include <benchmark/benchmark.h>

#include "dunklpoly/verify.hpp"

using dunklpoly::DunklContext;
using dunklpoly::FamilySpec;
using dunklpoly::GeneralizedGegenbauer;
using dunklpoly::GeneralizedHermite;
using dunklpoly::MomentFunctional;
using dunklpoly::Rational;

namespace {

void BM_GenerateHermite(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto gammas = family_gammas(GeneralizedHermite{Rational(1, 3)}, N);
    for (auto _ : state) {
        auto P = generate_mops(gammas, N);
        benchmark::DoNotOptimize(P);
    }
}
BENCHMARK(BM_GenerateHermite)->Arg(15)->Arg(30)->Arg(60);

void BM_QSequence(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const DunklContext ctx(Rational(1, 3), N + 2);
    const auto P = generate_mops(family_gammas(GeneralizedHermite{Rational(1, 3)}, N), N);
    for (auto _ : state) {
        auto Q = q_sequence(P, ctx);
        benchmark::DoNotOptimize(Q);
    }
}
BENCHMARK(BM_QSequence)->Arg(15)->Arg(30);

void BM_DetectThreeTerm(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto P = generate_mops(
        family_gammas(GeneralizedGegenbauer{Rational(1, 2), Rational(1, 2)}, N), N);
    for (auto _ : state) {
        auto det = detect_three_term(P);
        benchmark::DoNotOptimize(det);
    }
}
BENCHMARK(BM_DetectThreeTerm)->Arg(15)->Arg(30);

void BM_DdeResidualSweep(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const FamilySpec fam = GeneralizedGegenbauer{Rational(3, 4), Rational(1, 4)};
    const DunklContext ctx(family_mu(fam), N + 4);
    const auto gammas = family_gammas(fam, N + 2);
    const auto theta = family_theta(fam);
    const auto P = generate_mops(gammas, N);
    for (auto _ : state) {
        for (int n = 1; n <= N; ++n) {
            auto res = dde_residual(P[static_cast<std::size_t>(n)],
                                    dde_coefficients(theta, gammas, ctx, n), ctx);
            benchmark::DoNotOptimize(res);
        }
    }
}
BENCHMARK(BM_DdeResidualSweep)->Arg(15)->Arg(30);

void BM_Hankel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto u = MomentFunctional::hermite(Rational(1, 3));
    u.moment(2 * n);  // materialize outside the loop
    for (auto _ : state) {
        auto det = hankel(u, n);
        benchmark::DoNotOptimize(det);
    }
}
BENCHMARK(BM_Hankel)->Arg(8)->Arg(15);

void BM_VerifyAll(benchmark::State& state) {
    const FamilySpec fam = GeneralizedHermite{Rational(1, 3)};
    for (auto _ : state) {
        auto report = dunklpoly::verify_family(fam, static_cast<int>(state.range(0)), {"all"});
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyAll)->Arg(15)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
