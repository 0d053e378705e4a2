#include <benchmark/benchmark.h>

#include "fermibasis/basis.hpp"
#include "fermibasis/lattice.hpp"
#include "fermibasis/matrix.hpp"
#include "fermibasis/random_pool.hpp"

using namespace fermibasis;

static void BM_exact_rank(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    exactmath::RationalPool pool(42);
    exactmath::ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if ((r + c) % 3) m(r, c) = pool.next();
    for (auto _ : state) benchmark::DoNotOptimize(exactmath::exact_rank(m));
}
BENCHMARK(BM_exact_rank)->Arg(16)->Arg(32)->Arg(64);

static void BM_build_BJ(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    lr::SubsetIndex J = n >= 4 ? lr::SubsetIndex{4, 2} : lr::SubsetIndex{2};
    for (auto _ : state) benchmark::DoNotOptimize(basis::build_BJ(n, J));
}
BENCHMARK(BM_build_BJ)->Arg(2)->Arg(4);

static void BM_build_family(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(basis::build_family(n));
}
BENCHMARK(BM_build_family)->Arg(2)->Arg(3);

static void BM_certify_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(basis::certify_rank(n, 7));
}
BENCHMARK(BM_certify_rank)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_hstar_coeff(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    auto x = lattice::Phi(1, 1, lattice::QuasiLocalOp::vacuum());
    for (auto _ : state) benchmark::DoNotOptimize(lattice::hstar_coeff(p, x));
}
BENCHMARK(BM_hstar_coeff)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_lr_table(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lr::lr_series(l, 6));
}
BENCHMARK(BM_lr_table)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
