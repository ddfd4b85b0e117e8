#include <benchmark/benchmark.h>

#include "rrc/brackets.hpp"
#include "rrc/catalog.hpp"
#include "rrc/rrc_system.hpp"
#include "rrc/series.hpp"
#include "rrc/triangle.hpp"

using namespace rrc;

namespace {

PuiseuxSeries dense_series(long order, long seed) {
    std::map<long, Scalar> t;
    for (long e = 0; e < order; ++e)
        t.emplace(e, Scalar(make_rational((e * seed + 1) % 97 - 48, (e % 7) + 1)));
    return PuiseuxSeries::from_raw(1, std::move(t), Prec(Rational(order)));
}

}  // namespace

static void BM_SeriesMul(benchmark::State& state) {
    long order = state.range(0);
    PuiseuxSeries f = dense_series(order, 3), g = dense_series(order, 5);
    for (auto _ : state) {
        PuiseuxSeries h = f * g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_SeriesMul)->Arg(50)->Arg(100)->Arg(200);

static void BM_SeriesDiv(benchmark::State& state) {
    long order = state.range(0);
    PuiseuxSeries f = dense_series(order, 3);
    PuiseuxSeries g = PuiseuxSeries::one(Prec(Rational(order))) + dense_series(order, 7).mul_monomial(Scalar(1), Rational(1));
    for (auto _ : state) {
        PuiseuxSeries h = f / g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_SeriesDiv)->Arg(50)->Arg(100);

static void BM_Eisenstein(benchmark::State& state) {
    long order = state.range(0);
    for (auto _ : state) {
        PuiseuxSeries e = eisenstein(4, order);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_Eisenstein)->Arg(200)->Arg(500);

static void BM_RcBracket(benchmark::State& state) {
    long order = state.range(0);
    PuiseuxSeries d = delta(order);
    Rational w12 = make_rational(12);
    for (auto _ : state) {
        PuiseuxSeries b = rc_bracket(d, w12, d, w12, 3);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_RcBracket)->Arg(50)->Arg(100);

static void BM_SolveZ(benchmark::State& state) {
    long order = state.range(0);
    Signature sig = make_signature(2, 5, 1, 2);
    for (auto _ : state) {
        SeriesSolution sol = solve_z(sig, order);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_SolveZ)->Arg(20)->Arg(40);

static void BM_SolveQ(benchmark::State& state) {
    long order = state.range(0);
    for (auto _ : state) {
        SeriesSolution sol = solve_q(2, 3, order);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_SolveQ)->Arg(20)->Arg(40);

static void BM_VerifyClassical(benchmark::State& state) {
    long order = state.range(0);
    PuiseuxSeries P = eisenstein(2, order).scaled(Scalar(make_rational(1, 12)));
    PuiseuxSeries Q = eisenstein(4, order);
    PuiseuxSeries R = eisenstein(6, order);
    TriangleRRC sys = build_system(make_signature(2, 3, 1, 1));
    SeriesSolution sol{sys.sig, "q", P, Q, R, PuiseuxSeries::x(P.precision())};
    for (auto _ : state) {
        Report rep = verify_system(sys, sol);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_VerifyClassical)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
