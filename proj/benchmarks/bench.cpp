#include <benchmark/benchmark.h>

#include "hodgekit/hodge.hpp"
#include "hodgekit/lie.hpp"
#include "hodgekit/linalg.hpp"
#include "hodgekit/quillen.hpp"
#include "hodgekit/spectral.hpp"
#include "hodgekit/splitting.hpp"
#include "hodgekit/subspace.hpp"
#include "hodgekit/thom_whitney.hpp"
#include "util.hpp"

using namespace hodge;
using testutil::Rng;

namespace {

// Fixed-dimension variant of testutil::random_shs: benchmarks want the size
// as an axis, not a die roll.
SplitHodge sized_shs(Rng& r, size_t dim) {
    SplitHodge s;
    s.grading = testutil::random_bigrading(r, dim);
    Scalar half(mpq_class(1, 2));
    for (int a = 0; a <= 2; ++a)
        for (int b = a; b <= 2; ++b) {
            Matrix m = testutil::random_typed(r, s.grading, -a - 1, -b - 1);
            if (a == b)
                m = (m + m.conj()) * half;
            if (m.is_zero())
                continue;
            s.beta[{a, b}] = m;
            if (a != b)
                s.beta[{b, a}] = m.conj();
        }
    return s;
}

Dga sphere_two() {
    Dga a;
    a.dims[0] = 1;
    a.dims[1] = 0;
    a.dims[2] = 1;
    return a;
}

}  // namespace

static void BM_matrix_kernel(benchmark::State& state) {
    size_t n = static_cast<size_t>(state.range(0));
    Rng rng(101);
    Matrix m = testutil::random_matrix(rng, n, n / 2) *
               testutil::random_matrix(rng, n / 2, n);
    for (auto _ : state) {
        Subspace k = kernel(m);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_matrix_kernel)->Arg(8)->Arg(16)->Arg(32);

static void BM_subspace_sum_intersect(benchmark::State& state) {
    size_t n = static_cast<size_t>(state.range(0));
    Rng rng(102);
    Subspace u = Subspace::span(n, testutil::random_matrix(rng, n, n / 2));
    Subspace v = Subspace::span(n, testutil::random_matrix(rng, n, n / 2));
    for (auto _ : state) {
        Subspace s = sum(u, v);
        Subspace w = intersect(u, v);
        benchmark::DoNotOptimize(s);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_subspace_sum_intersect)->Arg(8)->Arg(16)->Arg(32);

static void BM_shs_roundtrip(benchmark::State& state) {
    Rng rng(103);
    SplitHodge s = sized_shs(rng, static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        SplitHodge back = frep_to_shs(shs_to_frep(s));
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_shs_roundtrip)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_deligne_bigrading(benchmark::State& state) {
    Rng rng(104);
    SplitHodge s = sized_shs(rng, static_cast<size_t>(state.range(0)));
    MixedHodge m = shs_to_mhs(s);
    for (auto _ : state) {
        BigradedSpace g = deligne_bigrading(m);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_deligne_bigrading)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_spectral_pages(benchmark::State& state) {
    Rng rng(105);
    FilteredComplex c = testutil::random_filtered_complex(
        rng, static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        auto pg = pages(c, 3);
        benchmark::DoNotOptimize(pg);
    }
}
BENCHMARK(BM_spectral_pages)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_free_lie_basis(benchmark::State& state) {
    int cap = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FreeLie f({1, 1}, static_cast<size_t>(cap), cap);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_free_lie_basis)->Arg(6)->Arg(9)->Arg(12);

static void BM_pi4_sphere(benchmark::State& state) {
    Dga s2 = sphere_two();
    size_t cap = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        PiReport p = pi_n(s2, 4, cap);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_pi4_sphere)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_thom_whitney_constant(benchmark::State& state) {
    Rng rng(106);
    Dga b = testutil::random_linear_dga(rng, 2);
    CosimplicialDga c = constant_cosimplicial(b, static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        ThomWhitneyResult th = thom_whitney(c, b.top(), 3);
        benchmark::DoNotOptimize(th);
    }
}
BENCHMARK(BM_thom_whitney_constant)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
