#include <benchmark/benchmark.h>

#include <random>

#include "qadhm/adhm/generators.hpp"
#include "qadhm/adhm/stability.hpp"
#include "qadhm/monad/monad.hpp"
#include "qadhm/qcalculus/operators.hpp"
#include "qadhm/qinstanton/qops.hpp"
#include "qadhm/qspacetime/harmonic.hpp"

using namespace qadhm;

static void BM_MatrixRank(benchmark::State& state) {
    SeededRng rng(7);
    auto n = static_cast<std::size_t>(state.range(0));
    QMatrix m = rng.matrix(n, n + 2);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_MatrixRank)->Arg(4)->Arg(8)->Arg(16);

static void BM_Classify(benchmark::State& state) {
    auto d = random_c_stable(static_cast<int>(state.range(0)), 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(classify(d));
}
BENCHMARK(BM_Classify)->Arg(1)->Arg(2)->Arg(3);

static void BM_DerivativeRank(benchmark::State& state) {
    auto d = random_c_stable(static_cast<int>(state.range(0)), 2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(derivative_rank(d));
}
BENCHMARK(BM_DerivativeRank)->Arg(1)->Arg(2)->Arg(3);

static void BM_MonadRoundTrip(benchmark::State& state) {
    auto d = random_c_stable(2, 2, 11);
    for (auto _ : state) benchmark::DoNotOptimize(normalize_monad(build_monad(d)));
}
BENCHMARK(BM_MonadRoundTrip);

// (x11 + x22)^n ordered into normal form; every reordering goes through the relations
static void BM_NCPolyPower(benchmark::State& state) {
    NCPoly f = NCPoly::gen(Chart::I, 0) + NCPoly::gen(Chart::I, 3) + NCPoly::gen(Chart::I, 1);
    for (auto _ : state) benchmark::DoNotOptimize(f.pow(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_NCPolyPower)->Arg(3)->Arg(5)->Arg(7);

static void BM_DeriveTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(derive_table(PChoice::Q));
}
BENCHMARK(BM_DeriveTable)->Unit(benchmark::kMillisecond);

static void BM_Laplacian(benchmark::State& state) {
    Calculus c(PChoice::Q);
    NCPoly f = basis_element(HarmonicIndex{static_cast<int>(state.range(0)), 0, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(tilde_laplacian(c, f));
}
BENCHMARK(BM_Laplacian)->Arg(0)->Arg(2)->Arg(4);  // 2l

static void BM_VerifyIds(benchmark::State& state) {
    auto d = random_c_stable(static_cast<int>(state.range(0)), 2, 13);
    for (auto _ : state) benchmark::DoNotOptimize(verify_ids(d));
}
BENCHMARK(BM_VerifyIds)->Arg(1)->Arg(2);

static void BM_SliceSurjectivity(benchmark::State& state) {
    auto d = random_c_stable(1, 2, 17);
    ProjPoint P{GaussRational(1), GaussRational(2)};
    for (auto _ : state) benchmark::DoNotOptimize(beta_surjective_truncated(d, P, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SliceSurjectivity)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
