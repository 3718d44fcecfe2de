#include <benchmark/benchmark.h>

#include "mdl/gmp_pool.hpp"
#include "mdl/linalg.hpp"
#include "mdl/nilorbit.hpp"
#include "mdl/strata.hpp"

#include <random>

namespace {

void BM_SpringerSample(benchmark::State& state) {
    const auto h = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(42);
    for (auto _ : state) {
        const auto p = mdl::nilorbit::sample_point(h, h / 2, rng, false);
        benchmark::DoNotOptimize(mdl::nilorbit::springer(p));
    }
}
BENCHMARK(BM_SpringerSample)->Arg(4)->Arg(6)->Arg(8);

void BM_SpringerRoundTrip(benchmark::State& state) {
    const auto h = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(42);
    for (auto _ : state) {
        const auto p = mdl::nilorbit::sample_point(h, h / 2, rng, true);
        const auto n = mdl::nilorbit::springer(p);
        benchmark::DoNotOptimize(mdl::nilorbit::fiber_space(n, h / 2));
    }
}
BENCHMARK(BM_SpringerRoundTrip)->Arg(4)->Arg(8);

void BM_CollectionGrid(benchmark::State& state) {
    const long g_max = state.range(0);
    for (auto _ : state) {
        long strata = 0;
        for (long g = 2; g <= g_max; ++g)
            for (long r = 1; r <= 6; ++r)
                for (long s = -6; s <= 6; ++s) {
                    if (g - r * s < 0)
                        continue;
                    strata += mdl::strata::build_collection({r, 1, s}, mdl::lattice::Genus(g)).mu;
                }
        benchmark::DoNotOptimize(strata);
    }
}
BENCHMARK(BM_CollectionGrid)->Arg(10)->Arg(30);

void BM_Rref(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-9, 9);
    mdl::linalg::RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = mdl::linalg::Rational(entry(rng), 1 + (entry(rng) + 9) % 4);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j).canonicalize();
    for (auto _ : state)
        benchmark::DoNotOptimize(mdl::linalg::rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

int main(int argc, char** argv) {
    mdl::install_gmp_pool();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv))
        return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
