#include <benchmark/benchmark.h>

#include "pim/e8.hpp"
#include "pim/eisenstein.hpp"
#include "pim/modforms.hpp"
#include "pim/pullback.hpp"
#include "pim/qform_enum.hpp"
#include "pim/siegel_series.hpp"

using namespace pim;

namespace {

HalfIntMat paper_A() {
    IntMat t(3, 3);
    long e[9] = {2, 0, 1, 0, 2, 1, 1, 1, 2};
    for (int i = 0; i < 9; ++i) t.at(i / 3, i % 3) = e[i];
    return HalfIntMat::from_twoB(std::move(t));
}

HalfIntMat paper_4x4() {
    IntMat t(4, 4);
    long e[16] = {2, 0, 1, 0, 0, 2, 1, 0, 1, 1, 2, 1, 0, 0, 1, 2};
    for (int i = 0; i < 16; ++i) t.at(i / 4, i % 4) = e[i];
    return HalfIntMat::from_twoB(std::move(t));
}

void BM_stratum_rank1_6x6(benchmark::State& state) {
    HalfIntMat B = HalfIntMat::block(paper_A(), IntMat(3, 3), paper_A());
    for (auto _ : state) benchmark::DoNotOptimize(stratum_sum_rank1(B, 2));
}
BENCHMARK(BM_stratum_rank1_6x6);

void BM_fp_solver_uncached(benchmark::State& state) {
    // distinct dilations defeat the class cache, so the solver really runs
    HalfIntMat base = paper_4x4();
    long scale = 1;
    for (auto _ : state) {
        state.PauseTiming();
        IntMat t = base.twoB();
        for (auto& v : t.a) v *= 2 * (scale % 7 + 1) + 1;
        ++scale;
        HalfIntMat B = HalfIntMat::from_twoB(std::move(t));
        state.ResumeTiming();
        benchmark::DoNotOptimize(fp_polynomial(B, 2));
    }
}
BENCHMARK(BM_fp_solver_uncached);

void BM_enumerate_R_3x3(benchmark::State& state) {
    HalfIntMat A = paper_A();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_R_block(A, A));
}
BENCHMARK(BM_enumerate_R_3x3);

void BM_fc_genus6(benchmark::State& state) {
    IntMat R(3, 3);
    R.at(0, 0) = 1;
    HalfIntMat B = HalfIntMat::block(paper_A(), R, paper_A());
    for (auto _ : state) benchmark::DoNotOptimize(fc_even_genus(B, 10));
}
BENCHMARK(BM_fc_genus6);

void BM_qseries_mul_200(benchmark::State& state) {
    QSeries e = e1_star(4, 200);
    for (auto _ : state) benchmark::DoNotOptimize(e * e);
}
BENCHMARK(BM_qseries_mul_200);

void BM_e8_histogram(benchmark::State& state) {
    HalfIntMat T = HalfIntMat::identity(2);
    for (auto _ : state) benchmark::DoNotOptimize(e8_pair_count(T, 2));
}
BENCHMARK(BM_e8_histogram);

void BM_big_C_k10(benchmark::State& state) {
    HalfIntMat A = paper_A();
    for (auto _ : state) benchmark::DoNotOptimize(big_C(10, A, A));
}
BENCHMARK(BM_big_C_k10)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
