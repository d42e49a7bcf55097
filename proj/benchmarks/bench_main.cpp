#include <benchmark/benchmark.h>

#include "loopkit/combinatorics.hpp"
#include "loopkit/loop_model.hpp"
#include "loopkit/matrix.hpp"
#include "loopkit/nilp.hpp"
#include "loopkit/qkz.hpp"

namespace {

using namespace loopkit;

void BM_CoefficientMatrix(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CoeffMatrix m = matrix_C(n);
        benchmark::DoNotOptimize(m.entries);
    }
}
BENCHMARK(BM_CoefficientMatrix)->DenseRange(2, 5);

void BM_TriangularInverse(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CoeffMatrix m = matrix_C(n);
    for (auto _ : state) {
        TauMatrix inv = unitriangular_inverse(m.entries);
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_TriangularInverse)->DenseRange(2, 5);

void BM_GroundStateKernel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GroundState g = ground_state_tau1(n);
        benchmark::DoNotOptimize(g.values);
    }
}
BENCHMARK(BM_GroundStateKernel)->DenseRange(2, 6);

void BM_PsiNested(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    Matching chain = Matching::unit_chain(r);
    matrix_Ctilde(r);  // steady state: the inverse matrix is already cached
    for (auto _ : state) {
        TauPoly value = psi_nested(chain, 2);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_PsiNested)->DenseRange(3, 5);

void BM_FreeFamilyDeterminant(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TauPoly value = g_lgv(0, r);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_FreeFamilyDeterminant)->DenseRange(4, 7);

void BM_PinnedFamilyBruteForce(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TauPoly value = f_bruteforce(2, r);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_PinnedFamilyBruteForce)->DenseRange(2, 4);

}  // namespace
