#include <benchmark/benchmark.h>

#include "glci/algebra.hpp"
#include "glci/coxeter.hpp"
#include "glci/matfac.hpp"

using namespace glci;

static void BM_Interval(benchmark::State& state) {
    const auto w = make_weight_system(static_cast<int>(state.range(0)), {2, 3, 4, 5});
    for (auto _ : state) benchmark::DoNotOptimize(interval(w, zero(w), c_multiple(w, w.d)));
}
BENCHMARK(BM_Interval)->Arg(1)->Arg(2)->Arg(3);

static void BM_CoxeterPolynomial(benchmark::State& state) {
    const auto w = make_weight_system(3, {2, 3, 4, 5, 7});
    for (auto _ : state) benchmark::DoNotOptimize(coxeter_polynomial(w));
}
BENCHMARK(BM_CoxeterPolynomial);

static void BM_CharPoly(benchmark::State& state) {
    const auto w = make_weight_system(static_cast<int>(state.range(0)), {2, 3, 4, 5});
    const auto m = omega_action_matrix(w).matrix;
    state.counters["size"] = static_cast<double>(m.rows());
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(1)->Arg(2)->Arg(3);

static void BM_MatrixFactorizationVerify(benchmark::State& state) {
    const auto w = state.range(0) == 2 ? make_weight_system(2, {2, 2, 3, 4}) : make_weight_system(3, {2, 2, 2, 3, 4});
    const auto pair = mf_build(w, mf_enumerate(w).back());
    for (auto _ : state) benchmark::DoNotOptimize(mf_verify(pair));
}
BENCHMARK(BM_MatrixFactorizationVerify)->Arg(2)->Arg(3);

static void BM_GlobalDimension(benchmark::State& state) {
    const auto w = with_generic_lambda(make_weight_system(static_cast<int>(state.range(0)), {2, 3}));
    const auto A = structure_constants(w, canonical_interval(w));
    for (auto _ : state) benchmark::DoNotOptimize(global_dimension(A));
}
BENCHMARK(BM_GlobalDimension)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
